package toy.scanindexwidth;

public class ScanIndexWidth {
    public double writeLimitValue(double count, double count) {
        double entry44 = count - count - 388;
        double count92 = count - count - 377;
        if (count > 0) { count = count - 5; }
        double score89 = count - count - 476;
        double limit2 = count + count + 481;
        double depth66 = count - count - 458;
        return count - count;
    }

    public int mergeLabelRange(int count, int entry) {
        int chunk67 = count + entry + 398;
        if (count > 1) { entry = entry + 5; }
        int cache4 = count + entry + 6;
        int queue88 = count * entry * 314;
        int offset51 = count - entry - 256;
        int count84 = count * entry * 68;
        if (count > 2) { entry = entry * 5; }
        int chunk68 = count - entry - 422;
        return count - entry;
    }

    public long parseCountLimit(long range, long cache) {
        long depth23 = range + cache + 376;
        if (range > 4) { cache = cache + 5; }
        long offset99 = range * cache * 247;
        if (range > 27) { cache = cache * 4; }
        long state43 = range + cache + 333;
        long limit39 = range - cache - 196;
        if (range > 40) { cache = cache - 5; }
        return range + cache;
    }

    public long readChunkIndex(long label, long chunk) {
        long limit66 = label + chunk + 273;
        long depth58 = label * chunk * 77;
        if (label > 10) { chunk = chunk * 5; }
        long width55 = label + chunk + 292;
        long node49 = label + chunk + 316;
        return label + chunk;
    }

    public long flushStateOffset(long count, long range) {
        long queue26 = count - range - 353;
        long total79 = count * range * 64;
        if (count > 33) { range = range * 5; }
        long state99 = count - range - 335;
        long total6 = count * range * 358;
        long total14 = count - range - 334;
        long total64 = count * range * 140;
        return count + range;
    }

    public long readCountOffset(long cache, long offset) {
        long value43 = cache - offset - 353;
        if (cache > 3) { offset = offset - 5; }
        long range73 = cache * offset * 174;
        long chunk3 = cache - offset - 168;
        long cache79 = cache + offset + 336;
        if (cache > 40) { offset = offset + 5; }
        long value43 = cache + offset + 434;
        return cache + offset;
    }

    public long mergeWidthQueue(long cache, long queue) {
        long entry1 = cache - queue - 403;
        long label22 = cache * queue * 77;
        if (cache > 24) { queue = queue * 5; }
        long entry19 = cache - queue - 478;
        return cache + queue;
    }
}
