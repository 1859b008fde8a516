// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/image.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

int side_for_length(std::size_t length) {
  const auto side = static_cast<long>(std::llround(std::sqrt(static_cast<double>(length))));
  if (side * side != static_cast<long>(length) || !is_valid_side(side)) {
    throw InputError("pattern length " + std::to_string(length) +
                     " is not the square of a power-of-two side >= 2");
  }
  return static_cast<int>(side);
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Whitespace/comment aware tokenizer for PGM headers and P2 payloads.
class PgmCursor {
 public:
  explicit PgmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long next_int(const char* what) {
    skip_space_and_comments();
    const auto start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) throw InputError(std::string("PGM: ") + what + " too large");
      ++pos_;
    }
    if (pos_ == start) {
      if (pos_ >= bytes_.size()) throw InputError(std::string("PGM: truncated before ") + what);
      throw InputError(std::string("PGM: malformed ") + what);
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_valid_side(long side) {
  return side >= 2 && std::has_single_bit(static_cast<unsigned long>(side));
}

Image::Image(int side, std::span<const int> pixels) : side_(side) {
  if (!is_valid_side(side)) {
    throw InputError("image side " + std::to_string(side) + " is not a power of two >= 2");
  }
  if (pixels.size() != static_cast<std::size_t>(side) * side) {
    throw InputError("expected " + std::to_string(side * side) + " pixels, got " +
                     std::to_string(pixels.size()));
  }
  pixels_.reserve(pixels.size());
  for (int v : pixels) {
    if (v < 0 || v > 255) throw InputError("gray value " + std::to_string(v) + " outside [0, 255]");
    pixels_.push_back(static_cast<std::uint8_t>(v));
  }
}

Image::Image(int side, std::vector<std::uint8_t> pixels) : side_(side), pixels_(std::move(pixels)) {
  if (!is_valid_side(side)) {
    throw InputError("image side " + std::to_string(side) + " is not a power of two >= 2");
  }
  if (pixels_.size() != static_cast<std::size_t>(side) * side) {
    throw InputError("expected " + std::to_string(side * side) + " pixels, got " +
                     std::to_string(pixels_.size()));
  }
}

Image Image::filled(int side, int value) {
  if (value < 0 || value > 255) {
    throw InputError("gray value " + std::to_string(value) + " outside [0, 255]");
  }
  return Image(side, std::vector<std::uint8_t>(static_cast<std::size_t>(side) * side,
                                               static_cast<std::uint8_t>(value)));
}

int Image::bits_per_axis() const { return std::countr_zero(static_cast<unsigned>(side_)); }

bool Image::is_binary() const {
  return std::all_of(pixels_.begin(), pixels_.end(), [](auto v) { return v == 0 || v == 255; });
}

Image parse_bitstring(std::string_view bits) {
  bits = trim(bits);
  std::vector<std::uint8_t> px;
  px.reserve(bits.size());
  for (char c : bits) {
    if (c == '0') {
      px.push_back(0);
    } else if (c == '1') {
      px.push_back(255);
    } else {
      throw InputError(std::string("bit pattern contains '") + c + "'; expected only 0 and 1");
    }
  }
  const int side = side_for_length(px.size());
  return Image(side, std::move(px));
}

Image parse_graylist(std::string_view list) {
  std::vector<int> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = list.find(',', start);
    const auto token = trim(list.substr(start, comma == std::string_view::npos ? comma : comma - start));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("malformed gray value '" + std::string(token) + "'");
    }
    if (v < 0 || v > 255) throw InputError("gray value " + std::to_string(v) + " outside [0, 255]");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int side = side_for_length(values.size());
  return Image(side, std::span<const int>(values));
}

Image parse_image_argument(std::string_view arg) {
  constexpr std::string_view pattern = "pattern:";
  constexpr std::string_view graylist = "graylist:";
  if (arg.starts_with(pattern)) return parse_bitstring(arg.substr(pattern.size()));
  if (arg.starts_with(graylist)) return parse_graylist(arg.substr(graylist.size()));
  return read_pgm_file(std::string(arg));
}

Image read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw InputError("PGM: missing P2/P5 magic number");
  }
  const bool binary = bytes[1] == '5';
  PgmCursor cur(bytes);
  cur.advance(2);
  const long width = cur.next_int("width");
  const long height = cur.next_int("height");
  const long maxval = cur.next_int("maxval");
  if (width != height) {
    throw InputError("PGM: image is " + std::to_string(width) + "x" + std::to_string(height) +
                     ", expected a square image");
  }
  if (!is_valid_side(width)) {
    throw InputError("PGM: side " + std::to_string(width) + " is not a power of two >= 2");
  }
  if (maxval != 255) throw InputError("PGM: maxval " + std::to_string(maxval) + " unsupported (need 255)");

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> px;
  px.reserve(count);
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.remaining() == 0) throw InputError("PGM: truncated payload");
    cur.advance(1);
    if (cur.remaining() < count) {
      throw InputError("PGM: truncated payload (" + std::to_string(cur.remaining()) + " of " +
                       std::to_string(count) + " bytes)");
    }
    const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(cur.pos());
    px.assign(first, first + static_cast<std::ptrdiff_t>(count));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const long v = cur.next_int("pixel value");
      if (v > 255) throw InputError("PGM: pixel value " + std::to_string(v) + " exceeds maxval");
      px.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return Image(static_cast<int>(width), std::move(px));
}

Image read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open image file '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

std::vector<std::uint8_t> write_pgm(const Image& image) {
  std::ostringstream header;
  header << "P5\n" << image.side() << ' ' << image.side() << "\n255\n";
  const auto h = header.str();
  std::vector<std::uint8_t> out(h.begin(), h.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

void write_pgm_file(const Image& image, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  const auto bytes = write_pgm(image);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("failed writing '" + path + "'");
}

Image set_pixel(const Image& image, long index, int value) {
  if (index < 0 || static_cast<std::size_t>(index) >= image.size()) {
    throw InputError("pixel index " + std::to_string(index) + " outside [0, " +
                     std::to_string(image.size()) + ")");
  }
  if (value < 0 || value > 255) throw InputError("gray value " + std::to_string(value) + " outside [0, 255]");
  std::vector<std::uint8_t> px(image.pixels().begin(), image.pixels().end());
  px[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(value);
  return Image(image.side(), std::move(px));
}

Image translate_cyclic(const Image& image, long shift) {
  const auto n = image.size();
  if (shift < 0 || static_cast<std::size_t>(shift) >= n) {
    throw InputError("shift " + std::to_string(shift) + " outside [0, " + std::to_string(n) + ")");
  }
  std::vector<std::uint8_t> px(n);
  const auto src = image.pixels();
  std::rotate_copy(src.begin(), src.end() - shift, src.end(), px.begin());
  return Image(image.side(), std::move(px));
}

std::string binary_label(const Image& image) {
  std::string label;
  label.reserve(image.size());
  for (auto v : image.pixels()) label.push_back(v >= 128 ? '1' : '0');
  return label;
}

Image complement(const Image& image) {
  std::vector<std::uint8_t> px(image.pixels().begin(), image.pixels().end());
  for (auto& v : px) v = static_cast<std::uint8_t>(255 - v);
  return Image(image.side(), std::move(px));
}

Image default_patron() {
  constexpr int side = 8;
  std::vector<std::uint8_t> px(side * side, 0);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int d = ((c - r) % side + side) % side;
      if (d == 0 || d == 1) px[r * side + c] = 255;
    }
  }
  return Image(side, std::move(px));
}

}  // namespace qcorr
