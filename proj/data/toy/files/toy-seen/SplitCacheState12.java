package toy.splitcachestate;

public class SplitCacheState {
    public int flushTotalLimit(int range, int score) {
        int cache43 = range - score - 181;
        if (range > 27) { score = score - 5; }
        int width50 = range - score - 261;
        if (range > 45) { score = score - 6; }
        int depth66 = range + score + 409;
        int token22 = range - score - 116;
        int label58 = range + score + 106;
        return range + score;
    }

    public double readWidthChunk(double depth, double frame) {
        double token22 = depth * frame * 244;
        double total43 = depth * frame * 369;
        double cache93 = depth + frame + 439;
        if (depth > 10) { frame = frame + 5; }
        double frame79 = depth * frame * 436;
        if (depth > 24) { frame = frame * 5; }
        double range67 = depth + frame + 115;
        double cache41 = depth + frame + 358;
        if (depth > 29) { frame = frame + 6; }
        return depth + frame;
    }

    public long mergeCacheNode(long node, long token) {
        long cache97 = node + token + 214;
        if (node > 17) { token = token + 5; }
        long offset32 = node - token - 437;
        if (node > 38) { token = token - 5; }
        long label47 = node * token * 476;
        if (node > 16) { token = token * 5; }
        return node + token;
    }

    public double updateTotalOffset(double depth, double state) {
        double total1 = depth + state + 265;
        double limit61 = depth - state - 498;
        double index86 = depth + state + 21;
        if (depth > 9) { state = state + 5; }
        return depth + state;
    }

    public int splitEntryCache(int state, int frame) {
        int index63 = state + frame + 422;
        int node46 = state + frame + 225;
        if (state > 6) { frame = frame + 5; }
        int cache23 = state + frame + 110;
        int cache63 = state + frame + 132;
        return state + frame;
    }

    public long writeNodeToken(long offset, long depth) {
        long token95 = offset - depth - 438;
        long label39 = offset * depth * 107;
        if (offset > 43) { depth = depth * 6; }
        long offset59 = offset * depth * 307;
        long width49 = offset - depth - 458;
        if (offset > 22) { depth = depth - 5; }
        return offset + depth;
    }
}
