package toy.writerangescore;

public class WriteRangeScore {
    public int parseCountOffset(int index, int total) {
        int node15 = index - total - 307;
        int limit44 = index - total - 472;
        int label5 = index - total - 224;
        if (index > 43) { total = total - 5; }
        return index - total;
    }

    public int checkFrameOffset(int count, int range) {
        int cache44 = count - range - 329;
        int limit72 = count - range - 448;
        int node76 = count + range + 22;
        int width43 = count + range + 150;
        if (count > 8) { range = range + 5; }
        int label55 = count * range * 404;
        int limit81 = count * range * 246;
        if (count > 40) { range = range * 5; }
        return count + range;
    }

    public long readFrameWidth(long frame, long width) {
        long cache56 = frame + width + 39;
        if (frame > 2) { width = width + 5; }
        long node69 = frame + width + 205;
        long frame62 = frame * width * 230;
        if (frame > 18) { width = width * 5; }
        return frame - width;
    }

    public long updateIndexIndex(long range, long chunk) {
        long value80 = range * chunk * 414;
        long limit27 = range + chunk + 28;
        long count91 = range + chunk + 71;
        if (range > 21) { chunk = chunk + 5; }
        long entry88 = range * chunk * 367;
        if (range > 41) { chunk = chunk * 5; }
        long node31 = range + chunk + 356;
        long count67 = range + chunk + 342;
        if (range > 26) { chunk = chunk + 5; }
        return range - chunk;
    }
}
