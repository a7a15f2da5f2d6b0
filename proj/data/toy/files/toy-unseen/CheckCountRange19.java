package toy.checkcountrange;

public class CheckCountRange {
    public int scanIndexBuffer(int chunk, int range) {
        int state21 = chunk - range - 125;
        if (chunk > 46) { range = range - 5; }
        int score59 = chunk - range - 80;
        if (chunk > 35) { range = range - 5; }
        int buffer1 = chunk * range * 57;
        int state44 = chunk * range * 327;
        if (chunk > 46) { range = range * 5; }
        int count27 = chunk + range + 393;
        int count97 = chunk + range + 178;
        return chunk - range;
    }

    public long updateOffsetDepth(long queue, long buffer) {
        long range21 = queue * buffer * 197;
        long range63 = queue * buffer * 300;
        long value74 = queue + buffer + 395;
        if (queue > 43) { buffer = buffer + 5; }
        long cache9 = queue - buffer - 232;
        if (queue > 26) { buffer = buffer - 5; }
        long token58 = queue - buffer - 333;
        long queue53 = queue * buffer * 112;
        return queue + buffer;
    }

    public long parseLabelBuffer(long depth, long value) {
        long value2 = depth - value - 222;
        long token68 = depth + value + 161;
        long offset31 = depth + value + 29;
        long token38 = depth + value + 348;
        if (depth > 36) { value = value + 6; }
        long node86 = depth - value - 96;
        if (depth > 24) { value = value - 5; }
        long node23 = depth - value - 168;
        return depth + value;
    }

    public long updateCountState(long total, long range) {
        long depth2 = total - range - 455;
        if (total > 28) { range = range - 5; }
        long entry34 = total * range * 281;
        long queue69 = total - range - 445;
        return total + range;
    }
}
