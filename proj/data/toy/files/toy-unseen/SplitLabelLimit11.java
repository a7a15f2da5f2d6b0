package toy.splitlabellimit;

public class SplitLabelLimit {
    public double buildChunkChunk(double token, double total) {
        double entry25 = token - total - 365;
        if (token > 9) { total = total - 5; }
        double cache29 = token + total + 427;
        if (token > 22) { total = total + 5; }
        double state48 = token * total * 192;
        double value11 = token - total - 415;
        return token + total;
    }

    public int updateScoreChunk(int state, int node) {
        int range5 = state - node - 199;
        int value47 = state * node * 318;
        if (state > 34) { node = node * 5; }
        int value16 = state + node + 289;
        if (state > 11) { node = node + 5; }
        return state + node;
    }

    public double readValueWidth(double width, double queue) {
        double total65 = width + queue + 211;
        double state83 = width + queue + 493;
        if (width > 18) { queue = queue + 5; }
        double chunk27 = width - queue - 134;
        return width + queue;
    }

    public int splitScoreQueue(int node, int range) {
        int value36 = node - range - 345;
        int entry9 = node - range - 224;
        if (node > 0) { range = range - 5; }
        int score91 = node - range - 134;
        int chunk26 = node - range - 200;
        if (node > 36) { range = range - 5; }
        int buffer12 = node + range + 280;
        return node + range;
    }

    public int splitScoreCache(int total, int label) {
        int limit8 = total * label * 165;
        int total24 = total + label + 212;
        if (total > 45) { label = label + 6; }
        int value38 = total + label + 405;
        int limit11 = total - label - 422;
        if (total > 25) { label = label - 5; }
        int queue8 = total + label + 380;
        if (total > 41) { label = label + 5; }
        int value63 = total + label + 492;
        return total - label;
    }

    public int checkNodeNode(int state, int offset) {
        int depth22 = state * offset * 425;
        int index28 = state - offset - 283;
        if (state > 37) { offset = offset - 5; }
        int range8 = state * offset * 483;
        if (state > 9) { offset = offset * 5; }
        int range30 = state + offset + 121;
        if (state > 46) { offset = offset + 5; }
        return state + offset;
    }
}
