#include "sarseg/pnm_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "sarseg/errors.hpp"

namespace sarseg {

namespace {

struct Cursor {
    const std::string& path;
    const std::vector<unsigned char>& buf;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw io_error(path + ": " + what + " at byte " + std::to_string(pos));
    }
    bool eof() const { return pos >= buf.size(); }
    unsigned char peek() const { return buf[pos]; }
};

std::vector<unsigned char> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error(path + ": cannot open for reading");
    std::vector<unsigned char> buf{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (in.bad()) throw io_error(path + ": read failure");
    return buf;
}

// Whitespace and '#' comments (to end of line) are allowed between header
// tokens and between P2 sample values.
void skip_separators(Cursor& c) {
    while (!c.eof()) {
        if (std::isspace(c.peek())) {
            ++c.pos;
        } else if (c.peek() == '#') {
            while (!c.eof() && c.peek() != '\n') ++c.pos;
        } else {
            break;
        }
    }
}

unsigned long read_uint(Cursor& c, const char* what) {
    skip_separators(c);
    if (c.eof()) c.fail(std::string("missing ") + what);
    if (!std::isdigit(c.peek())) c.fail(std::string("expected digit for ") + what);
    unsigned long value = 0;
    while (!c.eof() && std::isdigit(c.peek())) {
        value = value * 10 + (c.peek() - '0');
        if (value > 1000000000ul) c.fail(std::string(what) + " out of range");
        ++c.pos;
    }
    return value;
}

struct PgmData {
    int width = 0, height = 0;
    unsigned long maxval = 0;
    std::vector<unsigned long> samples;
};

PgmData parse_pgm(const std::string& path) {
    const std::vector<unsigned char> buf = slurp(path);
    Cursor c{path, buf};

    if (buf.size() < 2) c.fail("not a PGM file (missing magic)");
    const char m0 = static_cast<char>(buf[0]), m1 = static_cast<char>(buf[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
        std::string magic{m0, m1};
        throw io_error(path + ": unsupported magic \"" + magic + "\" at byte 0 (want P2 or P5)");
    }
    const bool binary = m1 == '5';
    c.pos = 2;

    const unsigned long w = read_uint(c, "width");
    const unsigned long h = read_uint(c, "height");
    const unsigned long maxval = read_uint(c, "maxval");
    if (w == 0 || h == 0) c.fail("image dimensions must be positive");
    if (w > 65536 || h > 65536) c.fail("image dimensions out of range");
    if (maxval == 0 || maxval > 65535) c.fail("maxval must lie in [1, 65535]");

    PgmData out;
    out.width = static_cast<int>(w);
    out.height = static_cast<int>(h);
    out.maxval = maxval;
    const std::size_t n = static_cast<std::size_t>(w) * h;
    out.samples.resize(n);

    if (binary) {
        if (c.eof() || !std::isspace(c.peek())) c.fail("expected single whitespace after maxval");
        ++c.pos;
        const int bytes = maxval < 256 ? 1 : 2;
        if (buf.size() - c.pos < n * static_cast<std::size_t>(bytes))
            c.fail("truncated pixel data (need " + std::to_string(n * bytes) + " bytes)");
        for (std::size_t i = 0; i < n; ++i) {
            unsigned long v = buf[c.pos++];
            if (bytes == 2) v = (v << 8) | buf[c.pos++];  // big-endian per netpbm
            if (v > maxval) {
                c.pos -= bytes;
                c.fail("sample value " + std::to_string(v) + " exceeds maxval");
            }
            out.samples[i] = v;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned long v = read_uint(c, "pixel value");
            if (v > maxval) c.fail("sample value " + std::to_string(v) + " exceeds maxval");
            out.samples[i] = v;
        }
    }
    return out;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error(path + ": cannot open for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw io_error(path + ": write failure");
}

}  // namespace

IntensityImage load_pgm(const std::string& path) {
    const PgmData d = parse_pgm(path);
    IntensityImage img(d.width, d.height);
    for (std::size_t i = 0; i < d.samples.size(); ++i) {
        img.v[i] = d.samples[i] == 0 ? 1e-6 : static_cast<double>(d.samples[i]);
    }
    return img;
}

SegmentationMask load_mask_pgm(const std::string& path) {
    const PgmData d = parse_pgm(path);
    SegmentationMask m(d.width, d.height);
    for (std::size_t i = 0; i < d.samples.size(); ++i) m.on[i] = d.samples[i] > 0 ? 1 : 0;
    return m;
}

void save_mask_pgm(const SegmentationMask& mask, const std::string& path) {
    std::string out = "P5\n" + std::to_string(mask.width) + " " + std::to_string(mask.height) +
                      "\n255\n";
    out.reserve(out.size() + mask.size());
    for (auto b : mask.on) out.push_back(b ? '\xff' : '\0');
    write_file(path, out);
}

void save_pgm(const ScalarField& image, const std::string& path) {
    if (image.size() == 0) throw io_error(path + ": refusing to write empty image");
    const double top = max_value(image);
    const unsigned long maxval = top > 255.5 ? 65535ul : 255ul;

    std::string out = "P5\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n" + std::to_string(maxval) + "\n";
    for (double x : image.v) {
        long v = std::lround(x);
        if (v < 0) v = 0;
        if (v > static_cast<long>(maxval)) v = static_cast<long>(maxval);
        if (maxval > 255) out.push_back(static_cast<char>((v >> 8) & 0xff));
        out.push_back(static_cast<char>(v & 0xff));
    }
    write_file(path, out);
}

std::vector<std::pair<int, int>> contour_pixels(const SegmentationMask& mask) {
    // A foreground pixel is on the contour when any of its 8 neighbours is
    // background. Testing the full 8-neighbourhood keeps each closed boundary
    // 4-connected (no diagonal gaps), so loops can be counted by a 4-connected
    // component search.
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < mask.height; ++r) {
        for (int c = 0; c < mask.width; ++c) {
            if (!mask.at(r, c)) continue;
            bool boundary = false;
            for (int dr = -1; dr <= 1 && !boundary; ++dr) {
                for (int dc = -1; dc <= 1 && !boundary; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int rr = r + dr, cc = c + dc;
                    if (rr < 0 || rr >= mask.height || cc < 0 || cc >= mask.width) continue;
                    boundary = !mask.at(rr, cc);
                }
            }
            if (boundary) out.emplace_back(r, c);
        }
    }
    return out;
}

void save_overlay_ppm(const IntensityImage& image, const SegmentationMask& mask,
                      const std::string& path) {
    if (image.width != mask.width || image.height != mask.height)
        throw io_error(path + ": overlay image and mask shapes differ");
    if (image.size() == 0) throw io_error(path + ": refusing to write empty overlay");

    const double top = max_value(image);
    const double scale = top > 0.0 ? 255.0 / top : 0.0;

    std::vector<unsigned char> gray(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
        long v = std::lround(image.v[i] * scale);
        if (v < 0) v = 0;
        if (v > 255) v = 255;
        gray[i] = static_cast<unsigned char>(v);
    }

    std::string out = "P6\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.reserve(out.size() + image.size() * 3);
    for (std::size_t i = 0; i < image.size(); ++i) {
        out.push_back(static_cast<char>(gray[i]));
        out.push_back(static_cast<char>(gray[i]));
        out.push_back(static_cast<char>(gray[i]));
    }
    for (const auto& [r, c] : contour_pixels(mask)) {
        const std::size_t base = out.size() - image.size() * 3 +
                                 3 * (static_cast<std::size_t>(r) * image.width + c);
        out[base] = '\xff';
        out[base + 1] = '\0';
        out[base + 2] = '\0';
    }
    write_file(path, out);
}

}  // namespace sarseg
