#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

// Exact linear algebra over GF(2) with bit-packed rows.

namespace cfk::f2 {

class Vector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Vector() = default;
  explicit Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool b) {
    const std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (b)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  Vector& operator^=(const Vector& o);

  bool any() const;
  std::size_t popcount() const;

  /// Index of the lowest set bit, npos when zero.
  std::size_t first_set() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Vector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool b) {
    const std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (b)
      bits_[r * wpr_ + (c >> 6)] |= mask;
    else
      bits_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  void flip(std::size_t r, std::size_t c) {
    bits_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  /// Matrix-vector product M x, with x indexed by columns.
  Vector apply(const Vector& x) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix transposed() const;

  bool is_zero() const;

  static Matrix identity(std::size_t n);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::size_t rank(Matrix m);

/// Basis of { x : M x = 0 }, deterministic (free columns ascending).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Incrementally echelonized span of vectors.
class Span {
 public:
  explicit Span(std::size_t dim) : dim_(dim) {}

  /// Returns true when v was independent of the current span.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, Vector>> rows_;  // (pivot, vector)
};

/// Span that tracks how each element decomposes over the added generators,
/// so membership queries come with coordinates.
class Solver {
 public:
  Solver(std::size_t dim, std::size_t max_generators)
      : dim_(dim), max_generators_(max_generators) {}

  void add(const Vector& g);

  /// Coordinates (length = generators added) expressing v, or nullopt.
  std::optional<Vector> solve(Vector v) const;

  std::size_t generators_added() const { return added_; }

 private:
  std::size_t dim_;
  std::size_t max_generators_;
  std::size_t added_ = 0;
  std::vector<std::pair<std::size_t, std::pair<Vector, Vector>>> rows_;  // (pivot, (vec, comb))
};

}  // namespace cfk::f2
