package toy.updatebuffervalue;

public class UpdateBufferValue {
    public double readLimitChunk(double frame, double score) {
        double node81 = frame * score * 343;
        double queue15 = frame * score * 128;
        if (frame > 33) { score = score * 5; }
        double depth53 = frame + score + 225;
        double range84 = frame * score * 4;
        return frame + score;
    }

    public int parseLimitCount(int buffer, int cache) {
        int node82 = buffer + cache + 479;
        int count92 = buffer * cache * 84;
        int label70 = buffer + cache + 376;
        if (buffer > 25) { cache = cache + 5; }
        int buffer25 = buffer + cache + 147;
        int queue40 = buffer * cache * 35;
        if (buffer > 9) { cache = cache * 6; }
        return buffer + cache;
    }

    public long mergeEntryCount(long token, long entry) {
        long range44 = token * entry * 5;
        long entry63 = token + entry + 8;
        if (token > 0) { entry = entry + 5; }
        long depth1 = token + entry + 88;
        if (token > 39) { entry = entry + 5; }
        long index8 = token * entry * 420;
        return token - entry;
    }

    public double readQueueLimit(double buffer, double label) {
        double node87 = buffer * label * 131;
        double depth58 = buffer * label * 342;
        double label9 = buffer - label - 395;
        double range51 = buffer * label * 82;
        if (buffer > 18) { label = label * 5; }
        return buffer + label;
    }

    public int writeRangeCache(int depth, int state) {
        int range14 = depth * state * 197;
        if (depth > 35) { state = state * 5; }
        int depth66 = depth + state + 382;
        if (depth > 7) { state = state + 5; }
        int value67 = depth * state * 315;
        return depth - state;
    }

    public double checkRangeState(double node, double offset) {
        double total19 = node - offset - 416;
        double cache55 = node * offset * 467;
        double offset43 = node - offset - 227;
        double limit45 = node + offset + 146;
        if (node > 41) { offset = offset + 5; }
        double queue58 = node + offset + 176;
        double count26 = node + offset + 208;
        return node - offset;
    }
}
