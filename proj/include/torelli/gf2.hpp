#pragma once

// Dense linear algebra over the two-element field.
//
// Vectors are bit-packed into 64-bit words. Matrices are stored by rows.
// Pivot selection is always "lowest column first", so every reduced form
// produced here is deterministic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli::gf2 {

class F2Vector {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Vector() = default;
  explicit F2Vector(std::size_t length);
  /// Builds a vector from a 0/1 list.
  static F2Vector from_bits(const std::vector<int>& bits);
  static F2Vector unit(std::size_t length, std::size_t index);

  [[nodiscard]] std::size_t size() const { return length_; }
  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t popcount() const;
  /// Index of the lowest set coordinate, if any.
  [[nodiscard]] std::optional<std::size_t> leading() const;
  /// Standard bilinear form sum_i v_i w_i.
  [[nodiscard]] bool dot(const F2Vector& other) const;

  F2Vector& operator+=(const F2Vector& other);
  friend F2Vector operator+(F2Vector lhs, const F2Vector& rhs) { return lhs += rhs; }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  /// "[1,0,1]"
  [[nodiscard]] std::string to_string() const;

private:
  std::vector<Word> words_;
  std::size_t length_ = 0;
};

class F2Matrix {
public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  /// All rows must have length `cols`.
  F2Matrix(std::vector<F2Vector> rows, std::size_t cols);
  static F2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  static F2Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
  [[nodiscard]] const F2Vector& row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] const std::vector<F2Vector>& row_list() const { return rows_; }
  [[nodiscard]] F2Vector column(std::size_t c) const;

  void append_row(F2Vector v);
  [[nodiscard]] F2Matrix transpose() const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
  std::vector<F2Vector> rows_;
  std::size_t cols_ = 0;
};

/// Matrix acting on a column vector.
F2Vector operator*(const F2Matrix& m, const F2Vector& v);
F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);

struct RowReduction {
  F2Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged; pivots are strictly increasing.
RowReduction row_reduce(const F2Matrix& m);
std::size_t rank(const F2Matrix& m);
/// Throws std::invalid_argument on a length mismatch.
bool in_span(const F2Vector& v, const F2Matrix& m);

// Incrementally maintained echelon basis of a subspace. Rows are kept fully
// reduced against each other, so `reduce` yields a canonical normal form
// supported off the pivot columns.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Returns true if `v` enlarged the span.
  bool insert(F2Vector v);
  [[nodiscard]] F2Vector reduce(F2Vector v) const;
  [[nodiscard]] bool contains(const F2Vector& v) const { return reduce(v).is_zero(); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t length() const { return length_; }
  /// Pivot columns in increasing order.
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  /// The basis as an RREF matrix, rows ordered by pivot.
  [[nodiscard]] F2Matrix matrix() const;

private:
  std::size_t length_;
  std::vector<std::pair<std::size_t, F2Vector>> rows_;  // sorted by pivot
};

}  // namespace torelli::gf2
