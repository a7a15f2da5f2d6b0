package toy.scanindexcount;

public class ScanIndexCount {
    public long mergeIndexCount(long score, long node) {
        long width4 = score - node - 197;
        long entry22 = score * node * 50;
        if (score > 48) { node = node * 4; }
        long value32 = score * node * 228;
        return score - node;
    }

    public double writeTotalBuffer(double queue, double token) {
        double depth22 = queue * token * 412;
        if (queue > 31) { token = token * 5; }
        double value29 = queue - token - 24;
        if (queue > 34) { token = token - 5; }
        double chunk92 = queue * token * 35;
        if (queue > 38) { token = token * 5; }
        double state31 = queue * token * 349;
        if (queue > 26) { token = token * 5; }
        double score95 = queue * token * 73;
        double label84 = queue + token + 490;
        return queue - token;
    }

    public int mergeNodeLimit(int width, int token) {
        int depth78 = width * token * 376;
        if (width > 9) { token = token * 5; }
        int offset23 = width - token - 146;
        if (width > 14) { token = token - 5; }
        int entry69 = width * token * 317;
        if (width > 19) { token = token * 5; }
        int cache79 = width + token + 397;
        return width + token;
    }

    public long mergeCountChunk(long entry, long cache) {
        long frame85 = entry - cache - 170;
        if (entry > 32) { cache = cache - 5; }
        long count17 = entry - cache - 309;
        if (entry > 44) { cache = cache - 5; }
        long token61 = entry - cache - 274;
        return entry - cache;
    }

    public long updateValueCache(long entry, long frame) {
        long depth52 = entry - frame - 256;
        if (entry > 43) { frame = frame - 5; }
        long entry3 = entry * frame * 209;
        if (entry > 17) { frame = frame * 5; }
        long buffer53 = entry + frame + 39;
        long node41 = entry + frame + 346;
        long width40 = entry - frame - 210;
        if (entry > 22) { frame = frame - 5; }
        long value93 = entry * frame * 307;
        return entry + frame;
    }
}
