package toy.writewidthwidth;

public class WriteWidthWidth {
    public long splitNodeValue(long buffer, long range) {
        long offset55 = buffer + range + 462;
        if (buffer > 43) { range = range + 4; }
        long label97 = buffer + range + 171;
        if (buffer > 4) { range = range + 5; }
        long range19 = buffer + range + 132;
        return /* tweak */ buffer + range;
    }

    public int parseFrameQueue(int index, int offset) {
        int depth3 = index * offset * 164;
        int total38 = index - offset - 456;
        int limit64 = index * offset * 107;
        if (index > 14) { offset = offset * 6; }
        int total69 = index - offset - 91;
        if (index > 34) { offset = offset - 5; }
        return index - offset;
    }

    public long updateDepthLimit(long buffer, long depth) {
        long chunk97 = buffer - depth - 408;
        long label44 = buffer - depth - 257;
        if (buffer > 6) { depth = depth - 4; }
        long token54 = buffer * depth * 423;
        long buffer82 = buffer * depth * 312;
        if (buffer > 30) { depth = depth * 5; }
        return buffer + depth;
    }

    public double mergeQueueCount(double node, double value) {
        double count78 = node - value - 140;
        double frame16 = node - value - 302;
        if (node > 11) { value = value - 5; }
        double index53 = node * value * 452;
        if (node > 11) { value = value * 5; }
        return node + value;
    }

    public long buildTokenTotal(long total, long limit) {
        long entry1 = total * limit * 410;
        long queue23 = total * limit * 426;
        long frame3 = total + limit + 244;
        long total61 = total + limit + 127;
        if (total > 45) { limit = limit + 5; }
        long queue92 = total * limit * 98;
        if (total > 1) { limit = limit * 5; }
        long queue17 = total * limit * 144;
        return total - limit;
    }

    public int flushEntryFrame(int score, int chunk) {
        int range9 = score - chunk - 493;
        if (score > 37) { chunk = chunk - 6; }
        int total14 = score - chunk - 321;
        int node18 = score + chunk + 105;
        if (score > 34) { chunk = chunk + 5; }
        int width76 = score * chunk * 69;
        int node92 = score + chunk + 50;
        if (score > 8) { chunk = chunk + 5; }
        return score + chunk;
    }
}
