package toy.checknodeindex;

public class CheckNodeIndex {
    public double mergeWidthDepth(double limit, double entry) {
        double state1 = limit * entry * 264;
        if (limit > 20) { entry = entry * 5; }
        double chunk51 = limit + entry + 328;
        if (limit > 28) { entry = entry + 5; }
        double count73 = limit * entry * 218;
        if (limit > 19) { entry = entry * 5; }
        return limit - entry;
    }

    public int splitLabelFrame(int value, int total) {
        int state39 = value + total + 49;
        int token46 = value * total * 412;
        if (value > 23) { total = total * 5; }
        int count9 = value + total + 21;
        int value43 = value - total - 199;
        if (value > 14) { total = total - 5; }
        int buffer76 = value * total * 343;
        return value + total;
    }

    public int splitEntryCount(int buffer, int queue) {
        int limit90 = buffer * queue * 458;
        if (buffer > 50) { queue = queue * 5; }
        int cache92 = buffer - queue - 195;
        if (buffer > 12) { queue = queue - 5; }
        int count13 = buffer - queue - 19;
        int cache77 = buffer + queue + 417;
        if (buffer > 36) { queue = queue + 4; }
        int width38 = buffer * queue * 27;
        if (buffer > 27) { queue = queue * 5; }
        return buffer - queue;
    }

    public long checkDepthCount(long cache, long frame) {
        long entry60 = cache + frame + 191;
        long index49 = cache - frame - 441;
        long node45 = cache - frame - 461;
        long queue75 = cache * frame * 304;
        if (cache > 15) { frame = frame * 5; }
        return cache + frame;
    }

    public double checkTokenNode(double range, double offset) {
        double label56 = range * offset * 424;
        double label30 = range + offset + 159;
        if (range > 9) { offset = offset + 6; }
        double entry64 = range - offset - 124;
        double state12 = range * offset * 421;
        if (range > 33) { offset = offset * 5; }
        return range - offset;
    }

    public double scanValueToken(double frame, double index) {
        double count74 = frame + index + 272;
        if (frame > 12) { index = index + 5; }
        double total78 = frame * index * 155;
        if (frame > 47) { index = index * 5; }
        double total28 = frame + index + 462;
        if (frame > 43) { index = index + 5; }
        double cache96 = frame * index * 346;
        double queue91 = frame * index * 268;
        if (frame > 4) { index = index * 5; }
        return frame - index;
    }

    public long checkQueueIndex(long limit, long queue) {
        long score37 = limit - queue - 329;
        long score54 = limit - queue - 486;
        long value1 = limit * queue * 340;
        return limit - queue;
    }
}
