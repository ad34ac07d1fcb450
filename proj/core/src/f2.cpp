#include "cfk/f2.hpp"

#include <bit>
#include <cassert>
#include <utility>

namespace cfk::f2 {

Vector& Vector::operator^=(const Vector& o) {
  assert(size_ == o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool Vector::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t Vector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Vector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return npos;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t w = 0; w < wpr_; ++w) {
    std::uint64_t bitsw = bits_[r * wpr_ + w];
    while (bitsw) {
      v.set((w << 6) + static_cast<std::size_t>(std::countr_zero(bitsw)), true);
      bitsw &= bitsw - 1;
    }
  }
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) v.set(r, true);
  return v;
}

void Matrix::xor_row(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < wpr_; ++w)
    std::swap(bits_[a * wpr_ + w], bits_[b * wpr_ + w]);
}

Vector Matrix::apply(const Vector& x) const {
  assert(x.size() == cols_);
  Vector out(rows_);
  const auto& xw = x.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= bits_[r * wpr_ + w] & xw[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t bitsw = bits_[r * wpr_ + w];
      while (bitsw) {
        const std::size_t k = (w << 6) + static_cast<std::size_t>(std::countr_zero(bitsw));
        bitsw &= bitsw - 1;
        for (std::size_t ww = 0; ww < out.wpr_; ++ww)
          out.bits_[r * out.wpr_ + ww] ^= rhs.bits_[k * rhs.wpr_ + ww];
      }
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t bitsw = bits_[r * wpr_ + w];
      while (bitsw) {
        const std::size_t c = (w << 6) + static_cast<std::size_t>(std::countr_zero(bitsw));
        bitsw &= bitsw - 1;
        out.set(c, r, true);
      }
    }
  return out;
}

bool Matrix::is_zero() const {
  for (auto b : bits_)
    if (b) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m.get(i, c)) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < rows; ++i)
      if (m.get(i, c)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;  // per pivot row
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.get(i, c)) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a.get(i, c)) a.xor_row(i, r);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v.set(f, true);
    for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
      if (a.get(pr, f)) v.set(pivot_col[pr], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Span::insert(Vector v) {
  assert(v.size() == dim_);
  for (const auto& [p, row] : rows_) {
    if (v.get(p)) v ^= row;
  }
  const std::size_t p = v.first_set();
  if (p == Vector::npos) return false;
  rows_.emplace_back(p, std::move(v));
  return true;
}

bool Span::contains(Vector v) const {
  for (const auto& [p, row] : rows_) {
    if (v.get(p)) v ^= row;
  }
  return !v.any();
}

void Solver::add(const Vector& g) {
  assert(added_ < max_generators_);
  Vector v = g;
  Vector comb(max_generators_);
  comb.set(added_, true);
  ++added_;
  for (const auto& [p, vc] : rows_) {
    if (v.get(p)) {
      v ^= vc.first;
      comb ^= vc.second;
    }
  }
  const std::size_t p = v.first_set();
  if (p == Vector::npos) return;  // dependent generator
  rows_.emplace_back(p, std::make_pair(std::move(v), std::move(comb)));
}

std::optional<Vector> Solver::solve(Vector v) const {
  Vector comb(max_generators_);
  for (const auto& [p, vc] : rows_) {
    if (v.get(p)) {
      v ^= vc.first;
      comb ^= vc.second;
    }
  }
  if (v.any()) return std::nullopt;
  return comb;
}

}  // namespace cfk::f2
