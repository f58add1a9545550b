/*
  Counting products of 0/1 matrices.

  mul_count returns, for every (i, j), the number of witnesses k with
  A[i][k] = B[k][j] = 1. Rectangular inputs are cut into s x s blocks with
  s = min(rows, inner, cols) (rounded up to the 64-bit word size), and each
  block triple goes through the square kernel. The kernel is either the
  word-packed popcount product or Strassen over 32-bit integers.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace apnp {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
    return ((data_[r * words_ + (c >> 6)] >> (c & 63)) & 1U) != 0;
  }
  void set(std::size_t r, std::size_t c) { data_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); }
  void reset(std::size_t r, std::size_t c) { data_[r * words_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63)); }
  void assign(std::size_t r, std::size_t c, bool v) { v ? set(r, c) : reset(r, c); }

  // Bits past cols() in the last word of a row are always zero.
  [[nodiscard]] std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * words_, words_};
  }

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] std::size_t count() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

class CountMatrix {
 public:
  CountMatrix() = default;
  CountMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

enum class Kernel { Packed, Strassen };

std::optional<Kernel> parse_kernel(std::string_view name);
std::string_view kernel_name(Kernel k);

// Configured exponent used to derive the balance parameter t. Not measured.
double effective_exponent(Kernel k);

struct MatmulOptions {
  Kernel kernel = Kernel::Packed;
  // Block edge length; 0 means min(rows, inner, cols). Rounded up to 64.
  std::size_t block = 0;
};

// Throws std::invalid_argument if a.cols() != b.rows().
CountMatrix mul_count(const BitMatrix& a, const BitMatrix& b, const MatmulOptions& options = {});

// Square blocks only: a and b must both be s x s.
CountMatrix square_kernel(const BitMatrix& a, const BitMatrix& b, Kernel kernel = Kernel::Packed);

}  // namespace apnp
