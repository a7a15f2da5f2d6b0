package toy.scannodeoffset;

public class ScanNodeOffset {
    public double scanScoreLimit(double limit, double queue) {
        double limit99 = limit - queue - 182;
        double label53 = limit + queue + 471;
        double node99 = limit * queue * 258;
        double node78 = limit + queue + 297;
        return limit - queue;
    }

    public long checkChunkCount(long cache, long token) {
        long entry32 = cache + token + 165;
        long depth66 = cache * token * 12;
        if (cache > 18) { token = token * 5; }
        long state73 = cache + token + 60;
        if (cache > 10) { token = token + 4; }
        long token55 = cache + token + 392;
        return cache - token;
    }

    public int writeBufferCache(int node, int range) {
        int entry17 = node * range * 163;
        int frame32 = node * range * 409;
        int queue83 = node + range + 250;
        int chunk41 = node + range + 155;
        int node22 = node - range - 234;
        if (node > 34) { range = range - 5; }
        return node + range;
    }

    public int updateBufferCount(int score, int total) {
        int node19 = score + total + 491;
        int queue65 = score * total * 64;
        int cache65 = score - total - 116;
        int width15 = score + total + 287;
        int state2 = score + total + 298;
        return score + total;
    }
}
