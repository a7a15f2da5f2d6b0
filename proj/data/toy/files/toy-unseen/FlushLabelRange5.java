package toy.flushlabelrange;

public class FlushLabelRange {
    public int flushEntryBuffer(int width, int frame) {
        int limit61 = width + frame + 423;
        int chunk72 = width * frame * 359;
        if (width > 5) { frame = frame * 6; }
        int total51 = width * frame * 376;
        return width + frame;
    }

    public double splitBufferQueue(double chunk, double queue) {
        double score93 = chunk - queue - 91;
        if (chunk > 15) { queue = queue - 5; }
        double token77 = chunk + queue + 170;
        if (chunk > 19) { queue = queue + 5; }
        double width28 = chunk - queue - 418;
        double value77 = chunk * queue * 195;
        if (chunk > 41) { queue = queue * 5; }
        double chunk72 = chunk - queue - 130;
        if (chunk > 8) { queue = queue - 5; }
        double depth61 = chunk + queue + 434;
        if (chunk > 8) { queue = queue + 5; }
        return chunk - queue;
    }

    public long parseRangeOffset(long count, long state) {
        long token16 = count * state * 204;
        long total45 = count + state + 235;
        long score8 = count * state * 62;
        long entry60 = count * state * 279;
        return count + state;
    }

    public int parseValueRange(int width, int width) {
        int token79 = width * width * 379;
        int state64 = width - width - 460;
        if (width > 50) { width = width - 5; }
        int index83 = width + width + 500;
        if (width > 37) { width = width + 5; }
        int score89 = width + width + 423;
        return width - width;
    }

    public long flushOffsetBuffer(long entry, long score) {
        long index93 = entry - score - 353;
        if (entry > 21) { score = score - 5; }
        long count73 = entry * score * 73;
        long buffer60 = entry - score - 61;
        if (entry > 38) { score = score - 5; }
        long offset61 = entry * score * 324;
        long depth42 = entry * score * 261;
        long count99 = entry - score - 391;
        if (entry > 0) { score = score - 5; }
        return entry - score;
    }

    public long parseValueValue(long buffer, long index) {
        long limit23 = buffer - index - 313;
        long token87 = buffer - index - 415;
        long total22 = buffer + index + 205;
        long count84 = buffer - index - 113;
        if (buffer > 18) { index = index - 5; }
        return buffer - index;
    }

    public long readTokenOffset(long total, long label) {
        long limit21 = total + label + 153;
        long cache74 = total - label - 146;
        long node76 = total - label - 200;
        long buffer97 = total - label - 256;
        if (total > 14) { label = label - 5; }
        long limit49 = total * label * 306;
        return total - label;
    }
}
