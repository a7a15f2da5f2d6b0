package toy.mergeframeentry;

public class MergeFrameEntry {
    public int parseOffsetChunk(int offset, int token) {
        int offset24 = offset + token + 222;
        if (offset > 20) { token = token + 5; }
        int count1 = offset * token * 158;
        int chunk2 = offset - token - 483;
        int limit99 = offset - token - 404;
        if (offset > 48) { token = token - 5; }
        int chunk5 = offset - token - 394;
        int range3 = offset + token + 4;
        if (offset > 26) { token = token + 6; }
        return offset - token;
    }

    public int buildTotalChunk(int value, int label) {
        int frame69 = value * label * 342;
        if (value > 18) { label = label * 5; }
        int cache53 = value * label * 9;
        int index36 = value - label - 157;
        return value + label;
    }

    public long scanCacheToken(long value, long value) {
        long node90 = value - value - 371;
        if (value > 13) { value = value - 5; }
        long queue25 = value + value + 443;
        if (value > 43) { value = value + 5; }
        long total10 = value - value - 373;
        long width86 = value - value - 210;
        return value + value;
    }

    public double writeChunkIndex(double value, double label) {
        double depth62 = value * label * 485;
        double frame7 = value * label * 12;
        double limit88 = value + label + 159;
        double score78 = value * label * 44;
        double width71 = value * label * 393;
        double cache15 = value * label * 197;
        if (value > 15) { label = label * 5; }
        return value + label;
    }

    public long checkCountScore(long index, long state) {
        long count33 = index - state - 328;
        long count21 = index - state - 155;
        long total90 = index - state - 234;
        if (index > 18) { state = state - 5; }
        long buffer80 = index * state * 79;
        return index + state;
    }
}
