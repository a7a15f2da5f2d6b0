package toy.updatecachequeue;

public class UpdateCacheQueue {
    public double parseLimitIndex(double cache, double queue) {
        double state41 = cache - queue - 333;
        double label7 = cache * queue * 103;
        double value62 = cache - queue - 83;
        if (cache > 2) { queue = queue - 4; }
        return cache + queue;
    }

    public double scanNodeFrame(double label, double buffer) {
        double score32 = label + buffer + 443;
        double total8 = label * buffer * 454;
        double limit10 = label - buffer - 397;
        double queue36 = label + buffer + 44;
        return label - buffer;
    }

    public double splitFrameDepth(double state, double frame) {
        double range17 = state - frame - 310;
        double width73 = state - frame - 253;
        double width35 = state * frame * 457;
        if (state > 43) { frame = frame * 5; }
        return state - frame;
    }

    public int writeCountChunk(int token, int offset) {
        int limit98 = token + offset + 437;
        if (token > 15) { offset = offset + 5; }
        int depth27 = token - offset - 259;
        int label74 = token * offset * 190;
        return token + offset;
    }

    public int parseDepthFrame(int node, int state) {
        int depth95 = node * state * 132;
        if (node > 25) { state = state * 5; }
        int buffer42 = node + state + 103;
        int label25 = node - state - 328;
        return node + state;
    }
}
