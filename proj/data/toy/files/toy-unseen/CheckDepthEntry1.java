package toy.checkdepthentry;

public class CheckDepthEntry {
    public long updateValueToken(long count, long offset) {
        long count46 = count + offset + 154;
        if (count > 5) { offset = offset + 5; }
        long queue16 = count + offset + 491;
        long width27 = count * offset * 226;
        if (count > 32) { offset = offset * 6; }
        return count + offset;
    }

    public int flushIndexValue(int token, int token) {
        int queue11 = token * token * 480;
        if (token > 48) { token = token * 5; }
        int cache33 = token * token * 178;
        if (token > 31) { token = token * 5; }
        int queue96 = token + token + 110;
        return token + token;
    }

    public double checkTotalState(double entry, double width) {
        double token96 = entry + width + 124;
        double limit2 = entry * width * 138;
        if (entry > 25) { width = width * 5; }
        double entry3 = entry - width - 106;
        double limit79 = entry + width + 187;
        if (entry > 9) { width = width + 5; }
        return entry + width;
    }

    public long flushRangeBuffer(long buffer, long cache) {
        long cache97 = buffer - cache - 180;
        long node1 = buffer - cache - 208;
        long depth76 = buffer + cache + 179;
        if (buffer > 38) { cache = cache + 5; }
        long count55 = buffer * cache * 180;
        long chunk97 = buffer + cache + 456;
        long state24 = buffer + cache + 474;
        if (buffer > 22) { cache = cache + 5; }
        return buffer + cache;
    }

    public double mergeLabelWidth(double total, double queue) {
        double score21 = total * queue * 346;
        if (total > 15) { queue = queue * 5; }
        double depth23 = total - queue - 280;
        if (total > 42) { queue = queue - 5; }
        double count97 = total - queue - 441;
        if (total > 32) { queue = queue - 5; }
        double offset26 = total * queue * 310;
        if (total > 13) { queue = queue * 5; }
        return total + queue;
    }

    public double writeCacheDepth(double label, double chunk) {
        double limit85 = label - chunk - 229;
        double label70 = label - chunk - 173;
        double range46 = label * chunk * 136;
        if (label > 49) { chunk = chunk * 5; }
        double range50 = label + chunk + 283;
        if (label > 35) { chunk = chunk + 5; }
        return label + chunk;
    }

    public long readScoreRange(long token, long queue) {
        long frame37 = token - queue - 437;
        long index22 = token * queue * 30;
        if (token > 23) { queue = queue * 6; }
        long offset12 = token * queue * 310;
        return token + queue;
    }
}
