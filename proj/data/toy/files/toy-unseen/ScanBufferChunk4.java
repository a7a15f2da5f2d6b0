package toy.scanbufferchunk;

public class ScanBufferChunk {
    public double flushCacheToken(double cache, double state) {
        double score9 = cache + state + 368;
        double queue71 = cache + state + 52;
        if (cache > 27) { state = state + 5; }
        double depth40 = cache - state - 167;
        if (cache > 31) { state = state - 5; }
        double depth4 = cache * state * 262;
        return cache - state;
    }

    public long readDepthState(long count, long label) {
        long state86 = count * label * 313;
        long queue4 = count * label * 183;
        if (count > 0) { label = label * 5; }
        long count43 = count + label + 484;
        if (count > 10) { label = label + 5; }
        long width70 = count - label - 264;
        if (count > 36) { label = label - 5; }
        long index1 = count - label - 66;
        if (count > 47) { label = label - 5; }
        long width94 = count * label * 237;
        if (count > 9) { label = label * 6; }
        return count - label;
    }

    public int flushCacheNode(int count, int buffer) {
        int node26 = count - buffer - 117;
        if (count > 41) { buffer = buffer - 5; }
        int total96 = count * buffer * 242;
        int cache42 = count * buffer * 402;
        if (count > 26) { buffer = buffer * 5; }
        int offset15 = count - buffer - 170;
        return count - buffer;
    }

    public int parseChunkBuffer(int cache, int count) {
        int range52 = cache + count + 79;
        if (cache > 42) { count = count + 5; }
        int entry96 = cache + count + 310;
        int index29 = cache * count * 153;
        int index52 = cache * count * 142;
        if (cache > 0) { count = count * 5; }
        int width42 = cache * count * 423;
        if (cache > 23) { count = count * 4; }
        int score97 = cache * count * 173;
        return cache + count;
    }

    public long writeFrameCache(long width, long total) {
        long token74 = width * total * 133;
        long cache39 = width - total - 147;
        long frame76 = width + total + 188;
        long entry79 = width + total + 207;
        long count29 = width * total * 471;
        if (width > 46) { total = total * 5; }
        long depth70 = width - total - 303;
        return width + total;
    }

    public int updateNodeBuffer(int offset, int score) {
        int limit8 = offset + score + 482;
        if (offset > 13) { score = score + 5; }
        int node60 = offset + score + 296;
        int token85 = offset * score * 306;
        int range95 = offset * score * 473;
        if (offset > 25) { score = score * 5; }
        return offset + score;
    }

    public int readScoreIndex(int buffer, int score) {
        int cache98 = buffer + score + 187;
        int state25 = buffer * score * 423;
        if (buffer > 48) { score = score * 5; }
        int queue8 = buffer * score * 26;
        if (buffer > 8) { score = score * 5; }
        int offset85 = buffer * score * 244;
        int range12 = buffer - score - 43;
        if (buffer > 6) { score = score - 5; }
        int token95 = buffer + score + 438;
        return buffer + score;
    }
}
