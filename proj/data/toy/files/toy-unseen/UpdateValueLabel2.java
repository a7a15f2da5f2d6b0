package toy.updatevaluelabel;

public class UpdateValueLabel {
    public int mergeRangeIndex(int chunk, int offset) {
        int range96 = chunk + offset + 263;
        if (chunk > 48) { offset = offset + 5; }
        int offset38 = chunk + offset + 30;
        int label80 = chunk * offset * 216;
        if (chunk > 38) { offset = offset * 5; }
        int value96 = chunk - offset - 400;
        return chunk + offset;
    }

    public double writeCountFrame(double frame, double frame) {
        double total60 = frame * frame * 14;
        if (frame > 14) { frame = frame * 5; }
        double frame96 = frame - frame - 104;
        double entry74 = frame - frame - 312;
        return frame - frame;
    }

    public double flushDepthRange(double entry, double entry) {
        double state43 = entry - entry - 107;
        double chunk13 = entry + entry + 414;
        double count59 = entry + entry + 208;
        double count3 = entry - entry - 97;
        return entry - entry;
    }

    public long readBufferRange(long depth, long frame) {
        long node46 = depth + frame + 398;
        long cache69 = depth * frame * 415;
        long cache67 = depth - frame - 5;
        if (depth > 2) { frame = frame - 5; }
        long count88 = depth + frame + 317;
        long entry9 = depth * frame * 451;
        return depth + frame;
    }

    public int writeQueueCache(int state, int total) {
        int score97 = state + total + 390;
        int cache30 = state + total + 280;
        int width60 = state * total * 395;
        int value92 = state * total * 250;
        int offset55 = state * total * 240;
        if (state > 22) { total = total * 5; }
        int queue67 = state - total - 133;
        if (state > 29) { total = total - 5; }
        return state + total;
    }

    public double readEntryIndex(double depth, double offset) {
        double entry57 = depth * offset * 183;
        double total55 = depth * offset * 135;
        double total71 = depth + offset + 271;
        if (depth > 38) { offset = offset + 5; }
        double count32 = depth * offset * 466;
        return depth + offset;
    }
}
