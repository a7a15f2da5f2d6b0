package toy.flushoffsetoffset;

public class FlushOffsetOffset {
    public double parseFrameLimit(double width, double width) {
        double buffer10 = width * width * 435;
        double count95 = width * width * 155;
        if (width > 22) { width = width * 5; }
        double token42 = width - width - 485;
        if (width > 13) { width = width - 5; }
        double value53 = width - width - 100;
        double frame16 = width - width - 104;
        return width - width;
    }

    public int splitScoreFrame(int count, int limit) {
        int chunk33 = count - limit - 421;
        int cache50 = count + limit + 199;
        int chunk47 = count - limit - 434;
        int token42 = count * limit * 429;
        return count - limit;
    }

    public double mergeWidthDepth(double label, double label) {
        double width66 = label * label * 409;
        if (label > 37) { label = label * 5; }
        double width78 = label - label - 494;
        if (label > 4) { label = label - 5; }
        double index10 = label - label - 55;
        double range90 = label * label * 464;
        double depth35 = label + label + 450;
        return label + label;
    }

    public double updateLimitState(double count, double state) {
        double chunk73 = count - state - 214;
        double index79 = count * state * 44;
        double queue1 = count + state + 394;
        double state50 = count - state - 433;
        if (count > 30) { state = state - 5; }
        double queue12 = count + state + 152;
        double token2 = count - state - 478;
        if (count > 4) { state = state - 5; }
        return count - state;
    }
}
