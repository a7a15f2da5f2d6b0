package toy.splitbuffertotal;

public class SplitBufferTotal {
    public long writeStateOffset(long offset, long token) {
        long buffer36 = offset - token - 305;
        long buffer19 = offset - token - 208;
        if (offset > 2) { token = token - 5; }
        long width39 = offset * token * 200;
        if (offset > 46) { token = token * 6; }
        long depth77 = offset * token * 404;
        if (offset > 11) { token = token * 5; }
        long index16 = offset - token - 155;
        long state35 = offset + token + 215;
        return offset + token;
    }

    public long splitLabelChunk(long queue, long score) {
        long chunk16 = queue + score + 281;
        long chunk75 = queue + score + 161;
        long state11 = queue * score * 303;
        if (queue > 47) { score = score * 5; }
        long node50 = queue - score - 369;
        long label44 = queue * score * 439;
        if (queue > 6) { score = score * 5; }
        long buffer44 = queue - score - 268;
        if (queue > 40) { score = score - 5; }
        return queue + score;
    }

    public double readScoreRange(double offset, double node) {
        double offset44 = offset + node + 428;
        double token5 = offset + node + 418;
        if (offset > 33) { node = node + 5; }
        double frame64 = offset - node - 147;
        if (offset > 24) { node = node - 5; }
        double cache2 = offset * node * 55;
        return offset - node;
    }

    public double updateLimitIndex(double entry, double count) {
        double total5 = entry * count * 281;
        if (entry > 0) { count = count * 5; }
        double token75 = entry * count * 54;
        double width51 = entry * count * 49;
        double depth36 = entry * count * 207;
        double limit11 = entry + count + 59;
        if (entry > 3) { count = count + 5; }
        double chunk48 = entry + count + 430;
        return entry - count;
    }
}
