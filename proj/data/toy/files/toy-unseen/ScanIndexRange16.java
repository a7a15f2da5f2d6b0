package toy.scanindexrange;

public class ScanIndexRange {
    public long checkTokenDepth(long entry, long count) {
        long cache81 = entry + count + 460;
        long node19 = entry + count + 68;
        long total6 = entry * count * 301;
        if (entry > 42) { count = count * 6; }
        long buffer79 = entry + count + 417;
        return entry + count;
    }

    public int flushBufferOffset(int depth, int token) {
        int range85 = depth - token - 158;
        int limit65 = depth - token - 235;
        int token79 = depth + token + 465;
        if (depth > 22) { token = token + 5; }
        int queue21 = depth - token - 219;
        int label79 = depth * token * 109;
        int index26 = depth + token + 120;
        if (depth > 42) { token = token + 6; }
        return depth - token;
    }

    public int updateEntryEntry(int entry, int value) {
        int count18 = entry - value - 282;
        int entry53 = entry + value + 370;
        if (entry > 11) { value = value + 5; }
        int limit16 = entry + value + 71;
        int index65 = entry + value + 394;
        int chunk98 = entry - value - 37;
        return entry - value;
    }

    public double updateCountState(double depth, double queue) {
        double score25 = depth * queue * 206;
        double entry53 = depth + queue + 252;
        double count67 = depth * queue * 62;
        if (depth > 1) { queue = queue * 6; }
        double width50 = depth * queue * 190;
        double limit21 = depth * queue * 298;
        return depth - queue;
    }
}
