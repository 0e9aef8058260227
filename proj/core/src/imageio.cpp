#include "seams/imageio.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "seams/error.hpp"

namespace seams {
namespace {

constexpr std::size_t kMaxPixels = std::size_t{1} << 26;

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// round((a*c + (255-a)*255) / 255) in integer arithmetic
inline std::uint8_t over_white(unsigned c, unsigned a) {
    const unsigned num = a * c + (255u - a) * 255u;
    return static_cast<std::uint8_t>((num + 127u) / 255u);
}

SrgbImage decode_png(std::FILE* f, const std::filesystem::path& path) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("libpng init failed");
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("png decode failed: " + path.string());
    }

    png_init_io(png, f);
    // Strip 16->8, expand palette/gray/tRNS, gray->RGB: everything arrives as
    // 8-bit RGB or RGBA rows.
    png_read_png(png, info,
                 PNG_TRANSFORM_STRIP_16 | PNG_TRANSFORM_PACKING | PNG_TRANSFORM_EXPAND |
                     PNG_TRANSFORM_GRAY_TO_RGB,
                 nullptr);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int channels = png_get_channels(png, info);
    if (w == 0 || h == 0 || static_cast<std::size_t>(w) * h > kMaxPixels ||
        (channels != 3 && channels != 4)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("unsupported png geometry: " + path.string());
    }

    SrgbImage img(static_cast<int>(w), static_cast<int>(h));
    png_bytepp rows = png_get_rows(png, info);
    for (png_uint_32 y = 0; y < h; ++y) {
        const png_bytep row = rows[y];
        for (png_uint_32 x = 0; x < w; ++x) {
            Srgb8& px = img.at(static_cast<int>(x), static_cast<int>(y));
            if (channels == 3) {
                px = {row[3 * x], row[3 * x + 1], row[3 * x + 2]};
            } else {
                const unsigned a = row[4 * x + 3];
                px = {over_white(row[4 * x], a), over_white(row[4 * x + 1], a),
                      over_white(row[4 * x + 2], a)};
            }
        }
    }
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(err->jump, 1);
}

SrgbImage decode_jpeg(std::FILE* f, const std::filesystem::path& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;

    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("jpeg decode failed: " + path.string());
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const unsigned w = cinfo.output_width;
    const unsigned h = cinfo.output_height;
    if (w == 0 || h == 0 || static_cast<std::size_t>(w) * h > kMaxPixels ||
        cinfo.output_components != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("unsupported jpeg geometry: " + path.string());
    }

    SrgbImage img(static_cast<int>(w), static_cast<int>(h));
    std::vector<JSAMPLE> row(static_cast<std::size_t>(w) * 3);
    JSAMPROW rowp = row.data();
    while (cinfo.output_scanline < h) {
        const unsigned y = cinfo.output_scanline;
        jpeg_read_scanlines(&cinfo, &rowp, 1);
        for (unsigned x = 0; x < w; ++x) {
            img.at(static_cast<int>(x), static_cast<int>(y)) = {row[3 * x], row[3 * x + 1],
                                                                row[3 * x + 2]};
        }
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

}  // namespace

SrgbImage decode_image(const std::filesystem::path& path) {
    FilePtr f(std::fopen(path.string().c_str(), "rb"));
    if (!f) throw DecodeError("cannot open file: " + path.string());

    unsigned char magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
    std::rewind(f.get());

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        return decode_png(f.get(), path);
    }
    if (got >= 2 && magic[0] == 0xFF && magic[1] == 0xD8) {
        return decode_jpeg(f.get(), path);
    }
    throw DecodeError("unrecognized image format: " + path.string());
}

void write_png(const std::filesystem::path& path, const SrgbImage& img) {
    if (img.width <= 0 || img.height <= 0) {
        throw InternalError("write_png: empty image");
    }
    FilePtr f(std::fopen(path.string().c_str(), "wb"));
    if (!f) throw DataError("cannot open for writing: " + path.string());

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw InternalError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw InternalError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw DataError("png encode failed: " + path.string());
    }

    png_init_io(png, f.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
                 static_cast<png_uint_32>(img.height), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> row(static_cast<std::size_t>(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const Srgb8& px = img.at(x, y);
            row[3 * static_cast<std::size_t>(x)] = px.r;
            row[3 * static_cast<std::size_t>(x) + 1] = px.g;
            row[3 * static_cast<std::size_t>(x) + 2] = px.b;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
}

}  // namespace seams
