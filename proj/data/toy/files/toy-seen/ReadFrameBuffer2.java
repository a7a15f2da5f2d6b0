package toy.readframebuffer;

public class ReadFrameBuffer {
    public int flushTokenLimit(int state, int count) {
        int frame9 = state - count - 48;
        if (state > 50) { count = count - 5; }
        int count72 = state - count - 31;
        int state48 = state * count * 230;
        int depth39 = state - count - 100;
        int queue86 = state + count + 194;
        return state - count;
    }

    public int checkChunkValue(int offset, int chunk) {
        int node67 = offset - chunk - 169;
        int range46 = offset + chunk + 214;
        if (offset > 39) { chunk = chunk + 5; }
        int count10 = offset - chunk - 110;
        int count45 = offset - chunk - 455;
        if (offset > 43) { chunk = chunk - 5; }
        return offset - chunk;
    }

    public double mergeLabelScore(double offset, double width) {
        double state25 = offset + width + 140;
        double range73 = offset * width * 330;
        double score76 = offset - width - 30;
        return offset - width;
    }

    public long parseNodeBuffer(long value, long label) {
        long entry37 = value * label * 151;
        if (value > 45) { label = label * 5; }
        long value74 = value + label + 275;
        if (value > 41) { label = label + 5; }
        long state48 = value + label + 205;
        return value + label;
    }
}
