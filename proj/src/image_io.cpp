#include "pointssim/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace pointssim {

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) return false;
    std::string tail = s.substr(s.size() - suffix.size());
    for (char& c : tail) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return tail == suffix;
}

// Reads the next integer token of a PGM header, skipping whitespace and
// '#' comments.
long read_pgm_token(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF) throw UnsupportedFormat("truncated graymap header: " + path);
    if (!std::isdigit(c)) throw UnsupportedFormat("malformed graymap header: " + path);
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000L)
            throw UnsupportedFormat("graymap header value out of range: " + path);
        c = in.get();
    }
    if (c != EOF) in.unget();
    return value;
}

BinaryImage load_pgm(std::ifstream& in, const std::string& path) {
    char magic[2];
    in.read(magic, 2);
    const bool ascii = magic[1] == '2';

    const long cols = read_pgm_token(in, path);
    const long rows = read_pgm_token(in, path);
    const long maxval = read_pgm_token(in, path);
    if (cols < 1 || rows < 1) throw EmptyImage("graymap has no pixels: " + path);
    if (maxval < 1 || maxval > 255)
        throw UnsupportedFormat("graymap maxval out of range [1,255]: " + path);

    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    std::vector<std::uint8_t> cells(n);
    if (ascii) {
        for (std::size_t i = 0; i < n; ++i) {
            const long v = read_pgm_token(in, path);
            if (v > maxval)
                throw UnsupportedFormat("graymap sample exceeds maxval: " + path);
            cells[i] = v != 0 ? 1 : 0;
        }
    } else {
        in.get();  // single whitespace byte after maxval
        std::vector<std::uint8_t> raw(n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            throw UnsupportedFormat("truncated graymap pixel data: " + path);
        for (std::size_t i = 0; i < n; ++i) cells[i] = raw[i] != 0 ? 1 : 0;
    }
    return BinaryImage(static_cast<int>(rows), static_cast<int>(cols), std::move(cells));
}

struct PngReadCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReadCloser() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

BinaryImage load_png(const std::string& path) {
    PngReadCloser ctx;
    ctx.fp = std::fopen(path.c_str(), "rb");
    if (!ctx.fp) throw UnreadableFile("cannot open file: " + path);

    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw UnreadableFile("libpng init failed: " + path);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw UnreadableFile("libpng init failed: " + path);

    if (setjmp(png_jmpbuf(ctx.png)))
        throw UnsupportedFormat("not a decodable PNG: " + path);

    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    const png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
    const png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
    const int color_type = png_get_color_type(ctx.png, ctx.info);
    const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);

    if (width == 0 || height == 0) throw EmptyImage("PNG has no pixels: " + path);
    if (color_type != PNG_COLOR_TYPE_GRAY && color_type != PNG_COLOR_TYPE_GRAY_ALPHA)
        throw UnsupportedFormat("only grayscale PNG is supported: " + path);

    if (bit_depth == 16) png_set_strip_16(ctx.png);
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
    if (color_type == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_strip_alpha(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height);
    std::vector<png_bytep> row_ptrs(height);
    for (png_uint_32 r = 0; r < height; ++r)
        row_ptrs[r] = raw.data() + static_cast<std::size_t>(r) * width;
    png_read_image(ctx.png, row_ptrs.data());
    png_read_end(ctx.png, nullptr);

    std::vector<std::uint8_t> cells(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) cells[i] = raw[i] != 0 ? 1 : 0;
    return BinaryImage(static_cast<int>(height), static_cast<int>(width), std::move(cells));
}

struct PngWriteCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriteCloser() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

void save_png(const BinaryImage& img, const std::string& path) {
    PngWriteCloser ctx;
    ctx.fp = std::fopen(path.c_str(), "wb");
    if (!ctx.fp) throw WriteFailure("cannot open file for writing: " + path);

    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw WriteFailure("libpng init failed: " + path);
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw WriteFailure("libpng init failed: " + path);

    if (setjmp(png_jmpbuf(ctx.png)))
        throw WriteFailure("PNG encode failed: " + path);

    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, img.cols(), img.rows(), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);

    std::vector<std::uint8_t> row(img.cols());
    for (int r = 0; r < img.rows(); ++r) {
        for (int c = 0; c < img.cols(); ++c) row[c] = img.at(r, c) ? 255 : 0;
        png_write_row(ctx.png, row.data());
    }
    png_write_end(ctx.png, nullptr);
}

void save_pgm(const BinaryImage& img, const std::string& path, bool ascii) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WriteFailure("cannot open file for writing: " + path);
    if (ascii) {
        out << "P2\n" << img.cols() << ' ' << img.rows() << "\n1\n";
        for (int r = 0; r < img.rows(); ++r) {
            for (int c = 0; c < img.cols(); ++c)
                out << int(img.at(r, c)) << (c + 1 == img.cols() ? '\n' : ' ');
        }
    } else {
        out << "P5\n" << img.cols() << ' ' << img.rows() << "\n1\n";
        out.write(reinterpret_cast<const char*>(img.cells().data()),
                  static_cast<std::streamsize>(img.cells().size()));
    }
    out.flush();
    if (!out) throw WriteFailure("write failed: " + path);
}

}  // namespace

BinaryImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UnreadableFile("cannot open file: " + path);

    unsigned char head[8] = {0};
    in.read(reinterpret_cast<char*>(head), 8);
    const std::streamsize got = in.gcount();
    if (got < 2) throw UnsupportedFormat("file too short: " + path);
    in.clear();
    in.seekg(0);

    if (head[0] == 'P' && (head[1] == '2' || head[1] == '5'))
        return load_pgm(in, path);

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (got == 8 && std::memcmp(head, png_sig, 8) == 0) {
        in.close();
        return load_png(path);
    }
    throw UnsupportedFormat("unrecognized image format: " + path);
}

void save_image(const BinaryImage& img, const std::string& path, ImageFormat format) {
    if (format == ImageFormat::Auto)
        format = has_suffix(path, ".png") ? ImageFormat::Png : ImageFormat::PgmBinary;
    switch (format) {
        case ImageFormat::Png: save_png(img, path); break;
        case ImageFormat::PgmAscii: save_pgm(img, path, true); break;
        default: save_pgm(img, path, false); break;
    }
}

}  // namespace pointssim
