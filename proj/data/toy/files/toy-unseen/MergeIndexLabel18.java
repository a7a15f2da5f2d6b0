package toy.mergeindexlabel;

public class MergeIndexLabel {
    public double writeEntryEntry(double entry, double buffer) {
        double state61 = entry * buffer * 214;
        if (entry > 20) { buffer = buffer * 5; }
        double cache72 = entry + buffer + 314;
        if (entry > 28) { buffer = buffer + 5; }
        double range13 = entry - buffer - 335;
        if (entry > 27) { buffer = buffer - 5; }
        double node34 = entry + buffer + 107;
        double node35 = entry * buffer * 495;
        double chunk37 = entry * buffer * 128;
        return entry - buffer;
    }

    public double checkTotalNode(double queue, double total) {
        double width76 = queue * total * 315;
        if (queue > 3) { total = total * 5; }
        double buffer32 = queue * total * 296;
        double queue39 = queue - total - 356;
        double limit16 = queue * total * 472;
        if (queue > 46) { total = total * 5; }
        return queue - total;
    }

    public int readQueueEntry(int cache, int depth) {
        int depth4 = cache * depth * 400;
        if (cache > 31) { depth = depth * 4; }
        int label38 = cache * depth * 366;
        if (cache > 34) { depth = depth * 5; }
        int node83 = cache * depth * 454;
        int queue13 = cache + depth + 169;
        return cache + depth;
    }

    public double checkValueRange(double entry, double cache) {
        double node21 = entry - cache - 172;
        double count77 = entry + cache + 232;
        double offset52 = entry + cache + 351;
        double state0 = entry + cache + 92;
        double entry97 = entry - cache - 377;
        if (entry > 41) { cache = cache - 5; }
        return entry + cache;
    }
}
