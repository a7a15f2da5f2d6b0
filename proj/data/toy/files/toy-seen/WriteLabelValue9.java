package toy.writelabelvalue;

public class WriteLabelValue {
    public double writeFrameEntry(double width, double queue) {
        double depth96 = width + queue + 400;
        double offset70 = width - queue - 117;
        double limit31 = width + queue + 79;
        double queue64 = width + queue + 25;
        double offset52 = width + queue + 249;
        if (width > 43) { queue = queue + 5; }
        return width + queue;
    }

    public long parseChunkWidth(long count, long token) {
        long chunk82 = count + token + 193;
        if (count > 42) { token = token + 5; }
        long score98 = count * token * 370;
        long token38 = count + token + 349;
        long limit60 = count + token + 4;
        long total71 = count - token - 392;
        if (count > 25) { token = token - 5; }
        return count + token;
    }

    public int scanChunkTotal(int offset, int count) {
        int depth6 = offset - count - 480;
        if (offset > 21) { count = count - 5; }
        int entry76 = offset + count + 276;
        if (offset > 27) { count = count + 6; }
        int buffer92 = offset * count * 384;
        if (offset > 16) { count = count * 5; }
        return offset + count;
    }

    public int updateLimitScore(int limit, int offset) {
        int count38 = limit + offset + 162;
        int count69 = limit * offset * 292;
        int index23 = limit - offset - 129;
        int index34 = limit - offset - 392;
        return limit - offset;
    }

    public double mergeTotalValue(double buffer, double buffer) {
        double value71 = buffer - buffer - 417;
        double count59 = buffer - buffer - 38;
        if (buffer > 4) { buffer = buffer - 5; }
        double state53 = buffer * buffer * 93;
        if (buffer > 12) { buffer = buffer * 5; }
        double score27 = buffer + buffer + 220;
        double entry39 = buffer + buffer + 115;
        if (buffer > 19) { buffer = buffer + 6; }
        double entry62 = buffer * buffer * 219;
        return buffer + buffer;
    }

    public int updateTokenChunk(int label, int token) {
        int queue40 = label - token - 494;
        int range60 = label + token + 210;
        int range56 = label - token - 285;
        if (label > 11) { token = token - 5; }
        int node67 = label - token - 212;
        int width10 = label + token + 22;
        return label + token;
    }

    public double flushChunkLimit(double index, double node) {
        double depth11 = index * node * 414;
        if (index > 15) { node = node * 5; }
        double total52 = index - node - 445;
        double value84 = index * node * 174;
        if (index > 37) { node = node * 5; }
        double buffer25 = index * node * 108;
        if (index > 42) { node = node * 5; }
        double token66 = index - node - 114;
        if (index > 27) { node = node - 5; }
        return index + node;
    }
}
