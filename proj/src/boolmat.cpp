#include "apnp/boolmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace apnp {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto* row = data_.data() + r * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      auto word = row[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        t.set(w * 64 + bit, r);
        word &= word - 1;
      }
    }
  }
  return t;
}

std::size_t BitMatrix::count() const {
  std::size_t total = 0;
  for (auto w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<Kernel> parse_kernel(std::string_view name) {
  if (name == "packed") return Kernel::Packed;
  if (name == "strassen") return Kernel::Strassen;
  return std::nullopt;
}

std::string_view kernel_name(Kernel k) { return k == Kernel::Packed ? "packed" : "strassen"; }

double effective_exponent(Kernel k) { return k == Kernel::Packed ? 3.0 : 2.807; }

namespace {

constexpr std::size_t kWord = 64;
constexpr std::size_t kStrassenCutoff = 64;

using Dense = std::vector<std::int64_t>;

// c[i0.., j0..] += a[i0.., k0..] * bt[j0.., k0..]^T over an s x s x s block.
// k0 and s are multiples of 64, so the inner range is whole words.
void packed_block(const BitMatrix& a, const BitMatrix& bt, CountMatrix& c, std::size_t i0, std::size_t k0,
                  std::size_t j0, std::size_t s) {
  const std::size_t i1 = std::min(i0 + s, a.rows());
  const std::size_t j1 = std::min(j0 + s, bt.rows());
  const std::size_t w0 = k0 / kWord;
  const std::size_t w1 = std::min((k0 + s) / kWord, a.words_per_row());
  for (std::size_t i = i0; i < i1; ++i) {
    const auto ar = a.row(i);
    for (std::size_t j = j0; j < j1; ++j) {
      const auto br = bt.row(j);
      std::uint32_t acc = 0;
      for (std::size_t w = w0; w < w1; ++w) acc += static_cast<std::uint32_t>(std::popcount(ar[w] & br[w]));
      c.at(i, j) += acc;
    }
  }
}

void naive_dense(const Dense& a, const Dense& b, Dense& c, std::size_t n) {
  std::fill(c.begin(), c.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto aik = a[i * n + k];
      if (aik == 0) continue;
      const auto* brow = b.data() + k * n;
      auto* crow = c.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

Dense quadrant(const Dense& m, std::size_t n, std::size_t qr, std::size_t qc) {
  const std::size_t h = n / 2;
  Dense out(h * h);
  for (std::size_t r = 0; r < h; ++r) {
    std::copy_n(m.begin() + static_cast<std::ptrdiff_t>((qr * h + r) * n + qc * h), h,
                out.begin() + static_cast<std::ptrdiff_t>(r * h));
  }
  return out;
}

Dense add(const Dense& x, const Dense& y) {
  Dense out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Dense sub(const Dense& x, const Dense& y) {
  Dense out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

// n is kStrassenCutoff times a power of two.
Dense strassen(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n * n);
  if (n <= kStrassenCutoff) {
    naive_dense(a, b, c, n);
    return c;
  }
  const std::size_t h = n / 2;
  const Dense a11 = quadrant(a, n, 0, 0), a12 = quadrant(a, n, 0, 1);
  const Dense a21 = quadrant(a, n, 1, 0), a22 = quadrant(a, n, 1, 1);
  const Dense b11 = quadrant(b, n, 0, 0), b12 = quadrant(b, n, 0, 1);
  const Dense b21 = quadrant(b, n, 1, 0), b22 = quadrant(b, n, 1, 1);

  const Dense m1 = strassen(add(a11, a22), add(b11, b22), h);
  const Dense m2 = strassen(add(a21, a22), b11, h);
  const Dense m3 = strassen(a11, sub(b12, b22), h);
  const Dense m4 = strassen(a22, sub(b21, b11), h);
  const Dense m5 = strassen(add(a11, a12), b22, h);
  const Dense m6 = strassen(sub(a21, a11), add(b11, b12), h);
  const Dense m7 = strassen(sub(a12, a22), add(b21, b22), h);

  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t col = 0; col < h; ++col) {
      const std::size_t q = r * h + col;
      c[r * n + col] = m1[q] + m4[q] - m5[q] + m7[q];
      c[r * n + h + col] = m3[q] + m5[q];
      c[(h + r) * n + col] = m2[q] + m4[q];
      c[(h + r) * n + h + col] = m1[q] - m2[q] + m3[q] + m6[q];
    }
  }
  return c;
}

void strassen_block(const BitMatrix& a, const BitMatrix& bt, CountMatrix& c, std::size_t i0, std::size_t k0,
                    std::size_t j0, std::size_t s) {
  std::size_t p = kStrassenCutoff;
  while (p < s) p *= 2;
  const std::size_t i1 = std::min(i0 + s, a.rows());
  const std::size_t j1 = std::min(j0 + s, bt.rows());
  const std::size_t k1 = std::min(k0 + s, a.cols());
  Dense da(p * p, 0);
  Dense db(p * p, 0);
  for (std::size_t i = i0; i < i1; ++i) {
    for (std::size_t k = k0; k < k1; ++k) {
      if (a.get(i, k)) da[(i - i0) * p + (k - k0)] = 1;
    }
  }
  for (std::size_t j = j0; j < j1; ++j) {
    for (std::size_t k = k0; k < k1; ++k) {
      if (bt.get(j, k)) db[(k - k0) * p + (j - j0)] = 1;
    }
  }
  const Dense dc = strassen(da, db, p);
  for (std::size_t i = i0; i < i1; ++i) {
    for (std::size_t j = j0; j < j1; ++j) c.at(i, j) += static_cast<std::uint32_t>(dc[(i - i0) * p + (j - j0)]);
  }
}

void block_product(Kernel kernel, const BitMatrix& a, const BitMatrix& bt, CountMatrix& c, std::size_t i0,
                   std::size_t k0, std::size_t j0, std::size_t s) {
  if (kernel == Kernel::Packed) {
    packed_block(a, bt, c, i0, k0, j0, s);
  } else {
    strassen_block(a, bt, c, i0, k0, j0, s);
  }
}

}  // namespace

CountMatrix mul_count(const BitMatrix& a, const BitMatrix& b, const MatmulOptions& options) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul_count: inner dimensions differ");
  CountMatrix c(a.rows(), b.cols());
  if (a.rows() == 0 || a.cols() == 0 || b.cols() == 0) return c;

  std::size_t s = options.block != 0 ? options.block : std::min({a.rows(), a.cols(), b.cols()});
  s = (s + kWord - 1) / kWord * kWord;
  const BitMatrix bt = b.transpose();
  for (std::size_t i0 = 0; i0 < a.rows(); i0 += s) {
    for (std::size_t k0 = 0; k0 < a.cols(); k0 += s) {
      for (std::size_t j0 = 0; j0 < b.cols(); j0 += s) {
        block_product(options.kernel, a, bt, c, i0, k0, j0, s);
      }
    }
  }
  return c;
}

CountMatrix square_kernel(const BitMatrix& a, const BitMatrix& b, Kernel kernel) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("square_kernel: operands must be square and of equal size");
  }
  return mul_count(a, b, MatmulOptions{kernel, a.rows()});
}

}  // namespace apnp
