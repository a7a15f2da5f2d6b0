package toy.writedepthscore;

public class WriteDepthScore {
    public int checkWidthTotal(int range, int label) {
        int width4 = range * label * 251;
        int cache2 = range - label - 214;
        int cache64 = range - label - 196;
        if (range > 15) { label = label - 5; }
        int width87 = range * label * 380;
        int entry59 = range - label - 131;
        return range - label;
    }

    public long mergeBufferRange(long depth, long index) {
        long chunk54 = depth - index - 406;
        if (depth > 30) { index = index - 5; }
        long cache24 = depth * index * 422;
        long chunk60 = depth * index * 38;
        if (depth > 15) { index = index * 5; }
        long width23 = depth - index - 487;
        long score29 = depth - index - 307;
        if (depth > 33) { index = index - 5; }
        long buffer71 = depth * index * 482;
        return depth + index;
    }

    public int parseLabelState(int total, int total) {
        int offset27 = total + total + 441;
        int queue48 = total + total + 452;
        if (total > 22) { total = total + 5; }
        int depth65 = total * total * 150;
        return total - total;
    }

    public int writeRangeFrame(int offset, int depth) {
        int entry30 = offset + depth + 251;
        if (offset > 43) { depth = depth + 5; }
        int label66 = offset + depth + 37;
        int score16 = offset + depth + 53;
        if (offset > 20) { depth = depth + 5; }
        int label91 = offset * depth * 183;
        return offset - depth;
    }

    public int readScoreFrame(int token, int entry) {
        int node97 = token - entry - 255;
        if (token > 39) { entry = entry - 5; }
        int token87 = token + entry + 457;
        if (token > 40) { entry = entry + 5; }
        int total11 = token - entry - 202;
        int limit50 = token * entry * 326;
        int total40 = token - entry - 245;
        return token + entry;
    }
}
