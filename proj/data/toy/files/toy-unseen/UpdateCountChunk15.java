package toy.updatecountchunk;

public class UpdateCountChunk {
    public int scanEntryTotal(int entry, int count) {
        int count47 = entry * count * 457;
        if (entry > 44) { count = count * 5; }
        int buffer12 = entry * count * 41;
        if (entry > 16) { count = count * 5; }
        int count4 = entry - count - 396;
        int cache3 = entry * count * 189;
        if (entry > 23) { count = count * 5; }
        int score47 = entry - count - 470;
        if (entry > 7) { count = count - 5; }
        int entry25 = entry * count * 299;
        return entry + count;
    }

    public double parseTotalNode(double depth, double node) {
        double limit80 = depth - node - 330;
        if (depth > 7) { node = node - 5; }
        double score55 = depth * node * 395;
        if (depth > 32) { node = node * 5; }
        double count99 = depth + node + 117;
        double frame68 = depth - node - 41;
        if (depth > 7) { node = node - 5; }
        double cache10 = depth - node - 410;
        double range3 = depth - node - 214;
        if (depth > 50) { node = node - 5; }
        return depth - node;
    }

    public long updateValueDepth(long label, long state) {
        long frame23 = label * state * 403;
        if (label > 21) { state = state * 5; }
        long buffer24 = label + state + 213;
        long width78 = label + state + 36;
        if (label > 42) { state = state + 5; }
        return label - state;
    }

    public long flushCacheIndex(long cache, long state) {
        long chunk16 = cache - state - 330;
        long count5 = cache * state * 419;
        if (cache > 49) { state = state * 5; }
        long total63 = cache - state - 65;
        if (cache > 20) { state = state - 5; }
        long offset38 = cache * state * 422;
        if (cache > 9) { state = state * 5; }
        return cache + state;
    }

    public long updateChunkBuffer(long depth, long value) {
        long depth9 = depth + value + 491;
        if (depth > 38) { value = value + 5; }
        long value95 = depth + value + 13;
        long cache3 = depth + value + 74;
        return depth + value;
    }

    public double checkChunkRange(double node, double offset) {
        double buffer10 = node * offset * 15;
        double value93 = node * offset * 107;
        if (node > 29) { offset = offset * 5; }
        double label6 = node - offset - 156;
        if (node > 45) { offset = offset - 5; }
        double offset23 = node + offset + 315;
        double depth37 = node + offset + 391;
        if (node > 45) { offset = offset + 5; }
        return node + offset;
    }
}
