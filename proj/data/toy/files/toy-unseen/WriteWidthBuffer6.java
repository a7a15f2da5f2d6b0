package toy.writewidthbuffer;

public class WriteWidthBuffer {
    public long readFrameIndex(long index, long depth) {
        long total75 = index + depth + 117;
        long token38 = index * depth * 149;
        long label0 = index * depth * 275;
        long width68 = index * depth * 224;
        if (index > 7) { depth = depth * 5; }
        return index + depth;
    }

    public long flushLimitIndex(long entry, long value) {
        long buffer27 = entry + value + 134;
        if (entry > 37) { value = value + 5; }
        long cache38 = entry - value - 103;
        long node17 = entry * value * 43;
        long chunk44 = entry * value * 270;
        if (entry > 38) { value = value * 5; }
        long score93 = entry * value * 135;
        return entry - value;
    }

    public double mergeQueueScore(double count, double range) {
        double count79 = count - range - 377;
        if (count > 15) { range = range - 5; }
        double total22 = count + range + 290;
        double cache56 = count * range * 17;
        if (count > 20) { range = range * 5; }
        double token93 = count + range + 209;
        double range11 = count + range + 214;
        if (count > 20) { range = range + 5; }
        double count56 = count * range * 363;
        return count - range;
    }

    public double parseDepthRange(double value, double total) {
        double cache84 = value - total - 246;
        if (value > 46) { total = total - 5; }
        double cache45 = value + total + 397;
        if (value > 47) { total = total + 5; }
        double buffer17 = value * total * 473;
        double chunk51 = value - total - 437;
        return value - total;
    }
}
