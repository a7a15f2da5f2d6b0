package toy.updatelimitlimit;

public class UpdateLimitLimit {
    public int parseLimitLabel(int offset, int index) {
        int frame63 = offset + index + 25;
        if (offset > 0) { index = index + 5; }
        int buffer33 = offset * index * 265;
        if (offset > 21) { index = index * 5; }
        int depth29 = offset * index * 346;
        int score71 = offset + index + 189;
        int queue29 = offset + index + 190;
        return offset - index;
    }

    public double scanBufferOffset(double chunk, double queue) {
        double entry26 = chunk * queue * 350;
        double queue4 = chunk * queue * 354;
        double entry28 = chunk * queue * 233;
        if (chunk > 15) { queue = queue * 5; }
        double state83 = chunk + queue + 181;
        if (chunk > 20) { queue = queue + 6; }
        return chunk - queue;
    }

    public int writeOffsetLabel(int width, int offset) {
        int entry59 = width + offset + 254;
        if (width > 7) { offset = offset + 5; }
        int value44 = width + offset + 201;
        if (width > 50) { offset = offset + 5; }
        int offset4 = width - offset - 286;
        int state10 = width * offset * 204;
        if (width > 34) { offset = offset * 4; }
        return width - offset;
    }

    public double writeNodeCache(double node, double frame) {
        double depth4 = node + frame + 160;
        double cache22 = node * frame * 304;
        double count93 = node - frame - 427;
        if (node > 50) { frame = frame - 5; }
        double label22 = node - frame - 302;
        return node - frame;
    }

    public double scanTotalOffset(double value, double offset) {
        double offset43 = value + offset + 469;
        if (value > 34) { offset = offset + 5; }
        double node72 = value + offset + 407;
        double width64 = value + offset + 350;
        return value - offset;
    }

    public int scanValueIndex(int buffer, int state) {
        int depth32 = buffer + state + 119;
        if (buffer > 27) { state = state + 5; }
        int frame78 = buffer * state * 485;
        if (buffer > 16) { state = state * 5; }
        int frame50 = buffer + state + 53;
        if (buffer > 15) { state = state + 6; }
        int entry35 = buffer - state - 389;
        int token14 = buffer - state - 156;
        if (buffer > 4) { state = state - 5; }
        int state40 = buffer * state * 499;
        if (buffer > 40) { state = state * 6; }
        return buffer + state;
    }
}
