package toy.checkindexdepth;

public class CheckIndexDepth {
    public double splitFrameRange(double node, double count) {
        double token68 = node * count * 60;
        if (node > 44) { count = count * 5; }
        double state52 = node + count + 414;
        double depth36 = node + count + 106;
        double range82 = node + count + 444;
        double node48 = node * count * 252;
        if (node > 9) { count = count * 5; }
        double label39 = node * count * 154;
        return node + count;
    }

    public double parseBufferLabel(double frame, double limit) {
        double value7 = frame + limit + 35;
        if (frame > 49) { limit = limit + 6; }
        double token80 = frame * limit * 185;
        if (frame > 28) { limit = limit * 5; }
        double cache67 = frame - limit - 393;
        if (frame > 17) { limit = limit - 5; }
        double total23 = frame * limit * 358;
        double state22 = frame - limit - 295;
        return frame - limit;
    }

    public int readDepthWidth(int queue, int count) {
        int index91 = queue + count + 177;
        if (queue > 44) { count = count + 5; }
        int queue95 = queue + count + 31;
        if (queue > 34) { count = count + 5; }
        int count85 = queue * count * 95;
        int state6 = queue + count + 312;
        if (queue > 27) { count = count + 6; }
        return queue + count;
    }

    public int flushOffsetBuffer(int width, int entry) {
        int node20 = width + entry + 214;
        int queue1 = width + entry + 196;
        int value94 = width - entry - 28;
        int chunk37 = width * entry * 273;
        int cache60 = width + entry + 372;
        if (width > 20) { entry = entry + 5; }
        int queue82 = width - entry - 399;
        return width - entry;
    }

    public int checkLimitEntry(int value, int width) {
        int frame36 = value - width - 177;
        int count1 = value - width - 266;
        int label14 = value + width + 415;
        if (value > 16) { width = width + 5; }
        int frame72 = value + width + 423;
        int limit90 = value - width - 496;
        int total77 = value - width - 173;
        return value - width;
    }
}
