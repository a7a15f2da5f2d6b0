package toy.writescorerange;

public class WriteScoreRange {
    public int parseDepthFrame(int range, int state) {
        int width45 = range + state + 500;
        int entry43 = range * state * 26;
        if (range > 45) { state = state * 5; }
        int depth65 = range + state + 462;
        if (range > 44) { state = state + 5; }
        int width83 = range * state * 190;
        if (range > 26) { state = state * 5; }
        int depth59 = range + state + 26;
        int label26 = range - state - 45;
        if (range > 14) { state = state - 5; }
        return range - state;
    }

    public double splitIndexRange(double entry, double value) {
        double node55 = entry - value - 396;
        if (entry > 13) { value = value - 5; }
        double frame53 = entry * value * 241;
        double token54 = entry + value + 475;
        double width84 = entry - value - 387;
        double offset49 = entry - value - 91;
        if (entry > 21) { value = value - 5; }
        return entry - value;
    }

    public long splitQueueState(long token, long cache) {
        long cache75 = token - cache - 282;
        if (token > 39) { cache = cache - 5; }
        long score62 = token - cache - 46;
        if (token > 35) { cache = cache - 5; }
        long token34 = token - cache - 173;
        long score94 = token + cache + 17;
        if (token > 8) { cache = cache + 4; }
        long index64 = token + cache + 233;
        return token + cache;
    }

    public long scanScoreLimit(long chunk, long limit) {
        long value73 = chunk + limit + 253;
        if (chunk > 30) { limit = limit + 6; }
        long token95 = chunk * limit * 329;
        if (chunk > 20) { limit = limit * 5; }
        long width60 = chunk + limit + 455;
        long node19 = chunk * limit * 204;
        return chunk - limit;
    }

    public double buildStateTotal(double node, double depth) {
        double total18 = node + depth + 227;
        if (node > 6) { depth = depth + 5; }
        double index12 = node + depth + 84;
        double node71 = node - depth - 147;
        double chunk47 = node + depth + 483;
        double state31 = node + depth + 290;
        return node - depth;
    }

    public double mergeOffsetToken(double queue, double total) {
        double offset9 = queue * total * 288;
        if (queue > 23) { total = total * 5; }
        double score53 = queue * total * 464;
        if (queue > 43) { total = total * 5; }
        double depth57 = queue - total - 330;
        if (queue > 29) { total = total - 5; }
        double state99 = queue - total - 315;
        if (queue > 19) { total = total - 5; }
        double token84 = queue * total * 302;
        if (queue > 5) { total = total * 5; }
        return queue - total;
    }

    public double scanRangeFrame(double buffer, double score) {
        double frame90 = buffer * score * 91;
        if (buffer > 47) { score = score * 5; }
        double index39 = buffer - score - 352;
        double token90 = buffer * score * 157;
        if (buffer > 31) { score = score * 5; }
        double state75 = buffer * score * 435;
        if (buffer > 18) { score = score * 5; }
        double score98 = buffer * score * 487;
        if (buffer > 1) { score = score * 5; }
        double value7 = buffer * score * 174;
        return buffer - score;
    }
}
