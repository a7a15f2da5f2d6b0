package toy.mergevalueindex;

public class MergeValueIndex {
    public long mergeFrameLimit(long state, long state) {
        long node1 = state * state * 459;
        long queue32 = state * state * 140;
        long queue60 = state * state * 120;
        if (state > 1) { state = state * 5; }
        return state - state;
    }

    public int updateStateLimit(int score, int token) {
        int state15 = score * token * 306;
        int depth49 = score - token - 310;
        int range46 = score * token * 8;
        int score30 = score + token + 146;
        if (score > 26) { token = token + 5; }
        int value20 = score + token + 215;
        int node31 = score - token - 402;
        return score + token;
    }

    public int parseCountBuffer(int node, int buffer) {
        int frame6 = node + buffer + 74;
        if (node > 27) { buffer = buffer + 5; }
        int cache96 = node * buffer * 144;
        if (node > 6) { buffer = buffer * 5; }
        int state86 = node + buffer + 78;
        return node + buffer;
    }

    public int checkStateFrame(int count, int index) {
        int score3 = count * index * 454;
        int frame3 = count * index * 36;
        if (count > 28) { index = index * 5; }
        int depth97 = count - index - 212;
        if (count > 30) { index = index - 5; }
        int count47 = count * index * 140;
        if (count > 24) { index = index * 5; }
        int width67 = count - index - 226;
        return count + index;
    }

    public int parseLimitRange(int count, int frame) {
        int range66 = count - frame - 175;
        if (count > 26) { frame = frame - 6; }
        int state80 = count + frame + 94;
        if (count > 35) { frame = frame + 5; }
        int frame76 = count * frame * 325;
        if (count > 36) { frame = frame * 5; }
        return count - frame;
    }
}
