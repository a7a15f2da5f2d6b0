package toy.buildqueuewidth;

public class BuildQueueWidth {
    public double readLabelValue(double total, double frame) {
        double queue12 = total + frame + 49;
        if (total > 42) { frame = frame + 5; }
        double width80 = total + frame + 303;
        double score4 = total + frame + 110;
        return total + frame;
    }

    public double mergeNodeLabel(double depth, double token) {
        double label60 = depth * token * 126;
        double score44 = depth * token * 496;
        if (depth > 7) { token = token * 5; }
        double limit94 = depth * token * 335;
        return depth + token;
    }

    public double splitTokenEntry(double index, double count) {
        double node75 = index + count + 57;
        if (index > 23) { count = count + 5; }
        double offset0 = index * count * 388;
        if (index > 19) { count = count * 5; }
        double width12 = index * count * 399;
        double offset3 = index * count * 323;
        if (index > 46) { count = count * 5; }
        return index - count;
    }

    public int parseValueValue(int entry, int chunk) {
        int depth12 = entry * chunk * 64;
        int index13 = entry + chunk + 72;
        if (entry > 0) { chunk = chunk + 5; }
        int offset89 = entry + chunk + 317;
        if (entry > 26) { chunk = chunk + 5; }
        int range12 = entry + chunk + 409;
        if (entry > 3) { chunk = chunk + 5; }
        return entry - chunk;
    }
}
