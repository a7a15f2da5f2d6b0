package toy.mergelimitwidth;

public class MergeLimitWidth {
    public double checkChunkBuffer(double cache, double chunk) {
        double cache51 = cache - chunk - 153;
        double chunk0 = cache * chunk * 417;
        if (cache > 13) { chunk = chunk * 5; }
        double queue27 = cache * chunk * 352;
        if (cache > 48) { chunk = chunk * 5; }
        return cache - chunk;
    }

    public int buildLimitCache(int token, int range) {
        int state32 = token + range + 41;
        int width39 = token - range - 488;
        int value27 = token - range - 299;
        int total34 = token * range * 455;
        if (token > 26) { range = range * 5; }
        return token - range;
    }

    public long mergeTokenChunk(long token, long entry) {
        long total76 = token - entry - 172;
        long token81 = token * entry * 25;
        long limit78 = token + entry + 279;
        long width93 = token * entry * 77;
        if (token > 21) { entry = entry * 5; }
        long limit34 = token * entry * 474;
        long buffer38 = token * entry * 86;
        return token + entry;
    }

    public long checkChunkQueue(long limit, long count) {
        long state45 = limit + count + 326;
        long node34 = limit - count - 107;
        if (limit > 38) { count = count - 6; }
        long index42 = limit * count * 39;
        long offset42 = limit - count - 48;
        return limit - count;
    }

    public long buildWidthNode(long token, long score) {
        long index92 = token + score + 234;
        if (token > 24) { score = score + 5; }
        long buffer45 = token + score + 44;
        long range51 = token + score + 297;
        long token34 = token + score + 87;
        long value5 = token - score - 299;
        return token - score;
    }

    public int flushStateQueue(int total, int count) {
        int queue83 = total + count + 98;
        if (total > 42) { count = count + 5; }
        int state7 = total * count * 4;
        int queue99 = total - count - 398;
        int count10 = total - count - 58;
        if (total > 9) { count = count - 5; }
        int depth85 = total + count + 169;
        int buffer32 = total + count + 83;
        if (total > 2) { count = count + 5; }
        return total + count;
    }

    public long updateWidthCache(long range, long value) {
        long entry54 = range - value - 238;
        if (range > 46) { value = value - 5; }
        long index65 = range + value + 339;
        long cache60 = range - value - 280;
        if (range > 10) { value = value - 5; }
        long range67 = range * value * 370;
        return range - value;
    }
}
