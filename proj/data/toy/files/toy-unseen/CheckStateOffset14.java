package toy.checkstateoffset;

public class CheckStateOffset {
    public int readEntryLimit(int cache, int node) {
        int width22 = cache * node * 32;
        int frame72 = cache + node + 488;
        if (cache > 48) { node = node + 5; }
        int limit89 = cache * node * 54;
        int entry54 = cache + node + 219;
        int limit47 = cache + node + 479;
        if (cache > 26) { node = node + 5; }
        int token67 = cache - node - 70;
        return cache - node;
    }

    public double mergeOffsetChunk(double queue, double limit) {
        double label63 = queue * limit * 91;
        double cache48 = queue * limit * 457;
        double limit7 = queue + limit + 343;
        return queue - limit;
    }

    public long checkWidthNode(long total, long score) {
        long index57 = total + score + 203;
        long index96 = total * score * 75;
        if (total > 23) { score = score * 5; }
        long queue78 = total - score - 449;
        if (total > 41) { score = score - 5; }
        long depth85 = total + score + 461;
        if (total > 38) { score = score + 5; }
        long buffer42 = total * score * 333;
        long count26 = total - score - 122;
        if (total > 44) { score = score - 5; }
        return total + score;
    }

    public int splitDepthTotal(int score, int score) {
        int entry23 = score + score + 401;
        if (score > 27) { score = score + 5; }
        int label30 = score - score - 57;
        int state64 = score * score * 389;
        if (score > 42) { score = score * 5; }
        int buffer76 = score - score - 52;
        int token53 = score + score + 423;
        int offset59 = score * score * 498;
        if (score > 17) { score = score * 5; }
        return score + score;
    }
}
