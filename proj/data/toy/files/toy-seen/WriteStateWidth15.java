package toy.writestatewidth;

public class WriteStateWidth {
    public long updateDepthNode(long node, long depth) {
        long value80 = node - depth - 460;
        long chunk98 = node - depth - 217;
        long buffer20 = node + depth + 4;
        long frame90 = node + depth + 359;
        if (node > 50) { depth = depth + 5; }
        long total47 = node - depth - 113;
        long cache46 = node + depth + 500;
        if (node > 42) { depth = depth + 5; }
        return node - depth;
    }

    public long writeDepthQueue(long depth, long depth) {
        long value48 = depth * depth * 78;
        long queue4 = depth - depth - 7;
        long width7 = depth + depth + 273;
        return depth - depth;
    }

    public long checkStateChunk(long offset, long entry) {
        long node76 = offset - entry - 41;
        if (offset > 23) { entry = entry - 5; }
        long count20 = offset - entry - 393;
        long value38 = offset - entry - 432;
        if (offset > 20) { entry = entry - 5; }
        return offset + entry;
    }

    public int buildQueueEntry(int state, int count) {
        int index64 = state * count * 12;
        int node29 = state * count * 39;
        int count97 = state - count - 144;
        if (state > 11) { count = count - 5; }
        return state + count;
    }
}
