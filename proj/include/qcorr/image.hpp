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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcorr {

/// Square grayscale image with a power-of-two side (>= 2), stored row-major:
/// pixel index i = row * side + col, index 0 at the top-left.
class Image {
 public:
  Image(int side, std::span<const int> pixels);
  Image(int side, std::vector<std::uint8_t> pixels);

  static Image filled(int side, int value);

  int side() const { return side_; }
  std::size_t size() const { return pixels_.size(); }
  // log2(side); the image is encoded on 2 * bits_per_axis() position qubits.
  int bits_per_axis() const;

  int at(std::size_t index) const { return pixels_[index]; }
  int at(int row, int col) const { return pixels_[static_cast<std::size_t>(row) * side_ + col]; }
  std::span<const std::uint8_t> pixels() const { return pixels_; }

  bool is_binary() const;

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int side_;
  std::vector<std::uint8_t> pixels_;
};

bool is_valid_side(long side);

// Bitstring ("1000": '1' -> 255, '0' -> 0) or comma-separated gray list
// ("51,204,204,51"). Length must be side^2 for a power-of-two side.
Image parse_bitstring(std::string_view bits);
Image parse_graylist(std::string_view list);

// "pattern:<bits>", "graylist:<v,...>" or a path to a PGM file.
Image parse_image_argument(std::string_view arg);

Image read_pgm(std::span<const std::uint8_t> bytes);
Image read_pgm_file(const std::string& path);
// Always P5, maxval 255.
std::vector<std::uint8_t> write_pgm(const Image& image);
void write_pgm_file(const Image& image, const std::string& path);

Image set_pixel(const Image& image, long index, int value);

// Cyclic shift in row-major linear order: out[j] = in[(j - shift) mod side^2].
Image translate_cyclic(const Image& image, long shift);

// "1000"-style label of a binary image (character i is pixel i).
std::string binary_label(const Image& image);

// Color complement v -> 255 - v.
Image complement(const Image& image);

// 8x8 stand-in patron: a two-pixel-wide diagonal stripe (255 where
// (col - row) mod 8 is 0 or 1, else 0). Also shipped as assets/patron_8x8.pgm.
Image default_patron();

}  // namespace qcorr
