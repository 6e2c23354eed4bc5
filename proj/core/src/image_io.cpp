#include "dustbench/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

namespace dustbench {

namespace fs = std::filesystem;

namespace {

using Bytes = std::vector<unsigned char>;

Bytes read_file(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec) || fs::is_directory(path, ec)) {
    throw IoError(IoErrorKind::kMissingFile, path.string(), "");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorKind::kMissingFile, path.string(), "cannot open");
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const fs::path& path, const Bytes& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(IoErrorKind::kUnwritable, path.string(), "");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(IoErrorKind::kUnwritable, path.string(), "write failed");
}

enum class Format { kPng, kPpm, kPfm, kUnknown };

Format sniff(const Bytes& bytes) {
  static constexpr unsigned char kPngMagic[8] = {0x89, 'P', 'N', 'G',
                                                 '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) {
    return Format::kPng;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '3' || bytes[1] == '6') return Format::kPpm;
    if (bytes[1] == 'F' || bytes[1] == 'f') return Format::kPfm;
  }
  return Format::kUnknown;
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// ---------------------------------------------------------------------------
// PNG

struct PngDecoded {
  int width = 0;
  int height = 0;
  int channels = 0;   // after transforms: 1 (gray) or 3 (rgb)
  int bit_depth = 0;  // 8 or 16
  bool source_gray = false;
  Bytes pixels;
  std::vector<png_bytep> rows;
  char error[256] = {};
};

struct PngReadCursor {
  const Bytes* bytes;
  std::size_t offset;
};

void png_error_fn(png_structp png, png_const_charp msg) {
  auto* decoded = static_cast<PngDecoded*>(png_get_error_ptr(png));
  if (decoded != nullptr) {
    std::snprintf(decoded->error, sizeof(decoded->error), "%s", msg);
  }
  png_longjmp(png, 1);
}

void png_warning_fn(png_structp, png_const_charp) {}

void png_read_fn(png_structp png, png_bytep out, png_size_t length) {
  auto* cursor = static_cast<PngReadCursor*>(png_get_io_ptr(png));
  if (cursor->offset + length > cursor->bytes->size()) {
    png_error(png, "unexpected end of file");
  }
  std::memcpy(out, cursor->bytes->data() + cursor->offset, length);
  cursor->offset += length;
}

// Returns false with decoded->error set on failure. Nothing with a
// non-trivial destructor is constructed after setjmp.
bool decode_png(const Bytes& bytes, bool want_rgb, PngDecoded* decoded,
                bool* header_ok) {
  *header_ok = false;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, decoded,
                                           png_error_fn, png_warning_fn);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return false;
  }
  PngReadCursor cursor{&bytes, 0};

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }

  png_set_read_fn(png, &cursor, png_read_fn);
  png_read_info(png, info);
  *header_ok = true;

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  decoded->source_gray = (color_type & PNG_COLOR_MASK_COLOR) == 0;
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (decoded->source_gray && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (want_rgb && decoded->source_gray) png_set_gray_to_rgb(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  decoded->width = static_cast<int>(width);
  decoded->height = static_cast<int>(height);
  decoded->channels = png_get_channels(png, info);
  decoded->bit_depth = png_get_bit_depth(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  decoded->pixels.resize(row_bytes * height);
  decoded->rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    decoded->rows[y] = decoded->pixels.data() + y * row_bytes;
  }
  png_read_image(png, decoded->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

PngDecoded read_png(const Bytes& bytes, const fs::path& path, bool want_rgb) {
  PngDecoded decoded;
  bool header_ok = false;
  if (!decode_png(bytes, want_rgb, &decoded, &header_ok)) {
    throw IoError(header_ok ? IoErrorKind::kCorruptData
                            : IoErrorKind::kCorruptHeader,
                  path.string(), decoded.error);
  }
  return decoded;
}

double png_sample(const PngDecoded& d, std::size_t i) {
  if (d.bit_depth == 16) {
    const unsigned v = (static_cast<unsigned>(d.pixels[2 * i]) << 8) |
                       d.pixels[2 * i + 1];
    return v / 65535.0;
  }
  return d.pixels[i] / 255.0;
}

void png_write_fn(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<Bytes*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void png_flush_fn(png_structp) {}

struct PngEncodeJob {
  int width;
  int height;
  int color_type;
  int bit_depth;
  const Bytes* pixels;
  Bytes* out;
  char error[256] = {};
};

bool encode_png(PngEncodeJob* job) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, job,
                                            nullptr, png_warning_fn);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, job->out, png_write_fn, png_flush_fn);
  png_set_IHDR(png, info, static_cast<png_uint_32>(job->width),
               static_cast<png_uint_32>(job->height), job->bit_depth,
               job->color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const int channels = job->color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
  const std::size_t row_bytes = static_cast<std::size_t>(job->width) *
                                channels * (job->bit_depth / 8);
  for (int y = 0; y < job->height; ++y) {
    png_write_row(png, const_cast<png_bytep>(job->pixels->data() +
                                             static_cast<std::size_t>(y) *
                                                 row_bytes));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

void write_png(const fs::path& path, int width, int height, int color_type,
               int bit_depth, const Bytes& pixels) {
  Bytes out;
  PngEncodeJob job{width, height, color_type, bit_depth, &pixels, &out};
  if (!encode_png(&job)) {
    throw IoError(IoErrorKind::kUnwritable, path.string(), "png encoding failed");
  }
  write_file(path, out);
}

// ---------------------------------------------------------------------------
// Netpbm-style headers

class HeaderReader {
 public:
  HeaderReader(const Bytes& bytes, const fs::path& path)
      : bytes_(bytes), path_(path) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const unsigned char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) &&
           bytes_[pos_] != '#') {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) corrupt("unexpected end of header");
    return out;
  }

  long integer(long lo, long hi, const char* what) {
    const std::string t = token();
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end == t.c_str() || *end != '\0' || v < lo || v > hi) {
      corrupt(std::string("bad ") + what + " '" + t + "'");
    }
    return v;
  }

  double real(const char* what) {
    const std::string t = token();
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0' || !std::isfinite(v)) {
      corrupt(std::string("bad ") + what + " '" + t + "'");
    }
    return v;
  }

  // Consumes the single whitespace byte separating header and raster.
  void end_of_header() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      corrupt("missing separator after header");
    }
    ++pos_;
  }

  [[noreturn]] void corrupt(const std::string& detail) const {
    throw IoError(IoErrorKind::kCorruptHeader, path_.string(), detail);
  }

  std::size_t position() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }

 private:
  const Bytes& bytes_;
  const fs::path& path_;
  std::size_t pos_ = 0;
};

constexpr long kMaxDimension = 1 << 16;

ImageRGB read_ppm(const Bytes& bytes, const fs::path& path) {
  HeaderReader header(bytes, path);
  const std::string magic = header.token();
  const int width = static_cast<int>(header.integer(1, kMaxDimension, "width"));
  const int height =
      static_cast<int>(header.integer(1, kMaxDimension, "height"));
  const long maxval = header.integer(1, 65535, "maxval");
  const std::size_t samples = static_cast<std::size_t>(width) * height * 3;
  std::vector<double> data(samples);
  const double scale = static_cast<double>(maxval);

  if (magic == "P3") {
    for (std::size_t i = 0; i < samples; ++i) {
      header.skip_space_and_comments();
      if (header.position() >= bytes.size()) {
        throw IoError(IoErrorKind::kCorruptData, path.string(),
                      "truncated ascii raster");
      }
      const std::string t = header.token();
      char* end = nullptr;
      const long v = std::strtol(t.c_str(), &end, 10);
      if (*end != '\0' || v < 0 || v > maxval) {
        throw IoError(IoErrorKind::kCorruptData, path.string(),
                      "bad sample '" + t + "'");
      }
      data[i] = static_cast<double>(v) / scale;
    }
  } else {
    header.end_of_header();
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    const std::size_t start = header.position();
    if (bytes.size() - start < samples * bytes_per_sample) {
      throw IoError(IoErrorKind::kCorruptData, path.string(),
                    "truncated binary raster");
    }
    const unsigned char* p = bytes.data() + start;
    for (std::size_t i = 0; i < samples; ++i) {
      unsigned v = p[i * bytes_per_sample];
      if (bytes_per_sample == 2) v = (v << 8) | p[i * 2 + 1];
      if (v > static_cast<unsigned>(maxval)) {
        throw IoError(IoErrorKind::kCorruptData, path.string(),
                      "sample exceeds maxval");
      }
      data[i] = static_cast<double>(v) / scale;
    }
  }
  return ImageRGB(width, height, std::move(data));
}

struct PfmData {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<double> values;  // top-to-bottom rows
};

PfmData read_pfm(const Bytes& bytes, const fs::path& path) {
  HeaderReader header(bytes, path);
  const std::string magic = header.token();
  PfmData pfm;
  pfm.channels = magic == "PF" ? 3 : 1;
  pfm.width = static_cast<int>(header.integer(1, kMaxDimension, "width"));
  pfm.height = static_cast<int>(header.integer(1, kMaxDimension, "height"));
  const double scale = header.real("scale");
  if (scale == 0.0) header.corrupt("scale must be non-zero");
  header.end_of_header();
  const bool little = scale < 0.0;

  const std::size_t count =
      static_cast<std::size_t>(pfm.width) * pfm.height * pfm.channels;
  const std::size_t start = header.position();
  if (bytes.size() - start < count * 4) {
    throw IoError(IoErrorKind::kCorruptData, path.string(),
                  "truncated float raster");
  }
  pfm.values.resize(count);
  const std::size_t row = static_cast<std::size_t>(pfm.width) * pfm.channels;
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned char* p = bytes.data() + start + i * 4;
    std::uint32_t bits = little ? (std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 |
                                   std::uint32_t(p[2]) << 16 |
                                   std::uint32_t(p[3]) << 24)
                                : (std::uint32_t(p[3]) | std::uint32_t(p[2]) << 8 |
                                   std::uint32_t(p[1]) << 16 |
                                   std::uint32_t(p[0]) << 24);
    const float v = std::bit_cast<float>(bits);
    if (!std::isfinite(v)) {
      throw IoError(IoErrorKind::kInvalidValue, path.string(),
                    "non-finite sample");
    }
    // PFM stores rows bottom-to-top.
    const std::size_t file_row = i / row;
    const std::size_t dest_row = static_cast<std::size_t>(pfm.height) - 1 - file_row;
    pfm.values[dest_row * row + i % row] = v;
  }
  return pfm;
}

void write_pfm(const DepthMap& depth, const fs::path& path) {
  const std::string header = "Pf\n" + std::to_string(depth.width()) + " " +
                             std::to_string(depth.height()) + "\n-1.0\n";
  Bytes out(header.begin(), header.end());
  out.reserve(out.size() + depth.pixel_count() * 4);
  for (int y = depth.height() - 1; y >= 0; --y) {
    for (int x = 0; x < depth.width(); ++x) {
      const auto bits = std::bit_cast<std::uint32_t>(
          static_cast<float>(depth.at(x, y)));
      for (int b = 0; b < 4; ++b) {
        out.push_back(static_cast<unsigned char>((bits >> (8 * b)) & 0xff));
      }
    }
  }
  write_file(path, out);
}

void require_writable_shape(int width, int height, const fs::path& path) {
  if (width <= 0 || height <= 0) {
    throw InvalidArgument("cannot save an empty raster (" +
                          std::to_string(width) + "x" + std::to_string(height) +
                          ") to " + path.string());
  }
}

}  // namespace

std::uint8_t quantize_8bit(double v) {
  const double q = std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
  return static_cast<std::uint8_t>(q);
}

ImageRGB load_image(const fs::path& path) {
  const Bytes bytes = read_file(path);
  switch (sniff(bytes)) {
    case Format::kPng: {
      const PngDecoded d = read_png(bytes, path, /*want_rgb=*/true);
      std::vector<double> data(static_cast<std::size_t>(d.width) * d.height * 3);
      for (std::size_t i = 0; i < data.size(); ++i) data[i] = png_sample(d, i);
      return ImageRGB(d.width, d.height, std::move(data));
    }
    case Format::kPpm:
      return read_ppm(bytes, path);
    case Format::kPfm:
      throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                    "PFM is only supported for depth maps");
    case Format::kUnknown:
      break;
  }
  throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                "expected PNG or PPM");
}

void save_image(const ImageRGB& image, const fs::path& path) {
  require_writable_shape(image.width(), image.height(), path);
  const std::string ext = lower_extension(path);
  Bytes pixels(image.sample_count());
  const auto data = image.data();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = quantize_8bit(data[i]);
  }
  if (ext == ".png") {
    write_png(path, image.width(), image.height(), PNG_COLOR_TYPE_RGB, 8,
              pixels);
  } else if (ext == ".ppm") {
    const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n255\n";
    Bytes out(header.begin(), header.end());
    out.insert(out.end(), pixels.begin(), pixels.end());
    write_file(path, out);
  } else {
    throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                  "images are written as .png or .ppm");
  }
}

DepthMap load_depth(const fs::path& path, bool normalize) {
  const Bytes bytes = read_file(path);
  int width = 0;
  int height = 0;
  std::vector<double> values;
  bool from_pfm = false;

  switch (sniff(bytes)) {
    case Format::kPng: {
      const PngDecoded d = read_png(bytes, path, /*want_rgb=*/false);
      if (!d.source_gray) {
        throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                      "depth PNG must be grayscale");
      }
      width = d.width;
      height = d.height;
      values.resize(static_cast<std::size_t>(width) * height);
      for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = png_sample(d, i);
      }
      break;
    }
    case Format::kPfm: {
      PfmData pfm = read_pfm(bytes, path);
      if (pfm.channels != 1) {
        throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                      "depth PFM must be single-channel (Pf)");
      }
      width = pfm.width;
      height = pfm.height;
      values = std::move(pfm.values);
      from_pfm = true;
      break;
    }
    default:
      throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                    "expected grayscale PNG or PFM depth");
  }

  if (normalize) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double min = *lo;
    const double range = *hi - *lo;
    for (double& v : values) v = range > 0.0 ? (v - min) / range : 0.0;
  } else if (from_pfm) {
    for (double v : values) {
      if (v < 0.0 || v > 1.0) {
        throw IoError(IoErrorKind::kInvalidValue, path.string(),
                      "un-normalized PFM depth must lie in [0,1]");
      }
    }
  }
  return DepthMap(width, height, std::move(values));
}

void save_depth(const DepthMap& depth, const fs::path& path) {
  require_writable_shape(depth.width(), depth.height(), path);
  const std::string ext = lower_extension(path);
  if (ext == ".pfm") {
    write_pfm(depth, path);
    return;
  }
  if (ext != ".png") {
    throw IoError(IoErrorKind::kUnsupportedFormat, path.string(),
                  "depth maps are written as .png or .pfm");
  }
  Bytes pixels(depth.pixel_count() * 2);
  const auto data = depth.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto v = static_cast<unsigned>(std::floor(data[i] * 65535.0 + 0.5));
    pixels[2 * i] = static_cast<unsigned char>(v >> 8);
    pixels[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
  }
  write_png(path, depth.width(), depth.height(), PNG_COLOR_TYPE_GRAY, 16,
            pixels);
}

}  // namespace dustbench
