package toy.splitvaluebuffer;

public class SplitValueBuffer {
    public int buildEntryDepth(int score, int index) {
        int score49 = score * index * 499;
        if (score > 50) { index = index * 4; }
        int score74 = score + index + 81;
        int range83 = score + index + 93;
        if (score > 47) { index = index + 5; }
        int entry94 = score + index + 62;
        int buffer2 = score - index - 286;
        int queue7 = score * index * 338;
        if (score > 38) { index = index * 5; }
        return score + index;
    }

    public int writeNodeValue(int node, int count) {
        int limit16 = node * count * 27;
        if (node > 33) { count = count * 5; }
        int label99 = node * count * 47;
        if (node > 40) { count = count * 4; }
        int entry66 = node * count * 391;
        int total89 = node - count - 339;
        int value82 = node + count + 93;
        int depth16 = node - count - 255;
        return node - count;
    }

    public double scanLabelDepth(double limit, double entry) {
        double index98 = limit + entry + 250;
        double limit64 = limit + entry + 236;
        double label55 = limit * entry * 161;
        if (limit > 39) { entry = entry * 5; }
        double state71 = limit + entry + 428;
        if (limit > 14) { entry = entry + 5; }
        double score82 = limit - entry - 28;
        if (limit > 25) { entry = entry - 4; }
        return limit + entry;
    }

    public long writeEntryCache(long limit, long label) {
        long state69 = limit * label * 238;
        long range44 = limit - label - 274;
        if (limit > 26) { label = label - 5; }
        long width42 = limit + label + 3;
        if (limit > 33) { label = label + 5; }
        long range62 = limit + label + 163;
        if (limit > 36) { label = label + 5; }
        long total13 = limit + label + 389;
        long count16 = limit - label - 365;
        return limit + label;
    }

    public long splitCacheToken(long score, long chunk) {
        long entry29 = score - chunk - 457;
        long frame31 = score - chunk - 406;
        if (score > 30) { chunk = chunk - 6; }
        long entry97 = score * chunk * 466;
        long limit25 = score * chunk * 303;
        long value77 = score + chunk + 271;
        return score - chunk;
    }

    public int mergeWidthNode(int chunk, int cache) {
        int node95 = chunk + cache + 253;
        if (chunk > 21) { cache = cache + 5; }
        int queue13 = chunk + cache + 480;
        int index0 = chunk - cache - 146;
        return chunk + cache;
    }

    public long buildBufferQueue(long width, long buffer) {
        long queue25 = width - buffer - 163;
        if (width > 5) { buffer = buffer - 5; }
        long total22 = width - buffer - 193;
        long label0 = width + buffer + 119;
        long cache24 = width - buffer - 383;
        if (width > 5) { buffer = buffer - 5; }
        return width - buffer;
    }
}
