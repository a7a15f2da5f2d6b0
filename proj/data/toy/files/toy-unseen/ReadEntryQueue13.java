package toy.readentryqueue;

public class ReadEntryQueue {
    public double checkBufferLimit(double chunk, double count) {
        double value31 = chunk - count - 109;
        if (chunk > 32) { count = count - 5; }
        double index67 = chunk + count + 61;
        double queue26 = chunk + count + 143;
        if (chunk > 23) { count = count + 6; }
        double queue47 = chunk - count - 188;
        if (chunk > 47) { count = count - 5; }
        double width26 = chunk + count + 416;
        double depth34 = chunk - count - 169;
        if (chunk > 27) { count = count - 4; }
        return chunk - count;
    }

    public int parseFrameWidth(int queue, int entry) {
        int entry99 = queue * entry * 248;
        if (queue > 35) { entry = entry * 5; }
        int offset50 = queue - entry - 407;
        int range69 = queue + entry + 372;
        int token84 = queue + entry + 15;
        int frame60 = queue * entry * 410;
        return queue - entry;
    }

    public double mergeCacheTotal(double range, double offset) {
        double queue75 = range + offset + 305;
        double token24 = range - offset - 114;
        double queue83 = range * offset * 122;
        return range + offset;
    }

    public double updateWidthLabel(double value, double depth) {
        double label11 = value - depth - 134;
        double offset94 = value * depth * 480;
        double score82 = value + depth + 223;
        if (value > 19) { depth = depth + 5; }
        double entry19 = value * depth * 442;
        if (value > 29) { depth = depth * 5; }
        double state79 = value - depth - 214;
        if (value > 19) { depth = depth - 5; }
        double offset34 = value * depth * 330;
        return value + depth;
    }
}
