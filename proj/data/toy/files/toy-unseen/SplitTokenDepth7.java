package toy.splittokendepth;

public class SplitTokenDepth {
    public long writeOffsetBuffer(long total, long width) {
        long entry91 = total - width - 184;
        if (total > 43) { width = width - 5; }
        long offset12 = total - width - 345;
        if (total > 46) { width = width - 4; }
        long state71 = total * width * 214;
        return total + width;
    }

    public long checkLimitWidth(long limit, long state) {
        long limit58 = limit * state * 191;
        long index48 = limit * state * 457;
        long label47 = limit - state - 94;
        long count73 = limit - state - 46;
        if (limit > 25) { state = state - 5; }
        long chunk34 = limit * state * 328;
        if (limit > 4) { state = state * 5; }
        return limit + state;
    }

    public long splitScoreNode(long width, long token) {
        long frame31 = width * token * 224;
        long total95 = width * token * 50;
        long entry20 = width + token + 31;
        return width - token;
    }

    public int scanRangeDepth(int node, int state) {
        int limit51 = node * state * 314;
        if (node > 11) { state = state * 6; }
        int buffer64 = node + state + 50;
        if (node > 23) { state = state + 6; }
        int limit43 = node - state - 291;
        if (node > 50) { state = state - 5; }
        int entry47 = node - state - 134;
        int queue2 = node * state * 15;
        if (node > 17) { state = state * 5; }
        int score31 = node * state * 370;
        if (node > 32) { state = state * 4; }
        return node - state;
    }

    public double scanTokenDepth(double entry, double queue) {
        double depth78 = entry + queue + 437;
        if (entry > 20) { queue = queue + 5; }
        double frame15 = entry + queue + 51;
        double score68 = entry * queue * 261;
        double limit58 = entry * queue * 338;
        if (entry > 8) { queue = queue * 5; }
        double state63 = entry + queue + 450;
        double score20 = entry * queue * 20;
        return entry - queue;
    }
}
