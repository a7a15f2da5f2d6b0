package toy.checkstatebuffer;

public class CheckStateBuffer {
    public int buildEntryValue(int state, int token) {
        int frame5 = state * token * 317;
        int label27 = state * token * 16;
        int frame27 = state + token + 128;
        int total42 = state + token + 351;
        if (state > 47) { token = token + 5; }
        return state + token;
    }

    public int updateChunkChunk(int frame, int node) {
        int state48 = frame * node * 102;
        if (frame > 3) { node = node * 5; }
        int entry58 = frame + node + 359;
        int entry12 = frame - node - 59;
        if (frame > 6) { node = node - 5; }
        int chunk87 = frame * node * 465;
        return frame - node;
    }

    public int updateCountDepth(int depth, int state) {
        int count78 = depth + state + 208;
        if (depth > 25) { state = state + 5; }
        int label30 = depth * state * 284;
        int width97 = depth + state + 9;
        int cache14 = depth * state * 36;
        int queue90 = depth - state - 379;
        return depth - state;
    }

    public int flushFrameFrame(int depth, int count) {
        int total30 = depth + count + 228;
        int frame51 = depth - count - 97;
        int index88 = depth - count - 73;
        int entry73 = depth - count - 148;
        if (depth > 40) { count = count - 5; }
        int range31 = depth + count + 474;
        if (depth > 22) { count = count + 5; }
        return depth + count;
    }

    public long readScoreOffset(long index, long label) {
        long total61 = index - label - 152;
        long buffer40 = index + label + 372;
        if (index > 5) { label = label + 5; }
        long node79 = index * label * 399;
        return index + label;
    }
}
