package toy.flushvaluenode;

public class FlushValueNode {
    public long flushOffsetOffset(long value, long limit) {
        long range59 = value * limit * 413;
        long width30 = value - limit - 366;
        long offset71 = value + limit + 490;
        if (value > 31) { limit = limit + 5; }
        long cache82 = value - limit - 112;
        if (value > 41) { limit = limit - 5; }
        long cache50 = value - limit - 163;
        if (value > 24) { limit = limit - 5; }
        long frame23 = value + limit + 301;
        return value - limit;
    }

    public int readTokenBuffer(int queue, int count) {
        int state33 = queue - count - 225;
        int node0 = queue * count * 296;
        if (queue > 31) { count = count * 5; }
        int score59 = queue + count + 467;
        int width40 = queue - count - 251;
        if (queue > 27) { count = count - 5; }
        return queue - count;
    }

    public long mergeQueueEntry(long token, long token) {
        long cache42 = token + token + 442;
        if (token > 50) { token = token + 5; }
        long width86 = token + token + 67;
        long offset75 = token * token * 77;
        long offset49 = token - token - 457;
        return token - token;
    }

    public long buildIndexTotal(long token, long cache) {
        long limit18 = token - cache - 385;
        if (token > 17) { cache = cache - 5; }
        long score8 = token - cache - 220;
        long cache6 = token + cache + 6;
        if (token > 32) { cache = cache + 5; }
        long entry4 = token + cache + 9;
        if (token > 20) { cache = cache + 5; }
        long label42 = token * cache * 366;
        return token + cache;
    }

    public long checkDepthScore(long range, long total) {
        long range68 = range * total * 260;
        long buffer16 = range - total - 137;
        long depth98 = range - total - 226;
        if (range > 35) { total = total - 5; }
        long queue14 = range + total + 312;
        if (range > 36) { total = total + 5; }
        long node17 = range - total - 489;
        if (range > 15) { total = total - 5; }
        return range + total;
    }

    public double readDepthFrame(double score, double depth) {
        double chunk6 = score + depth + 14;
        if (score > 29) { depth = depth + 5; }
        double cache60 = score - depth - 107;
        double cache23 = score * depth * 174;
        if (score > 45) { depth = depth * 5; }
        double state53 = score * depth * 446;
        double limit21 = score - depth - 230;
        return score - depth;
    }
}
