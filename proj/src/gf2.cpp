#include "torelli/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace torelli::gf2 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + F2Vector::kWordBits - 1) / F2Vector::kWordBits; }

}  // namespace

F2Vector::F2Vector(std::size_t length) : words_(word_count(length), 0), length_(length) {}

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, (bits[i] & 1) != 0);
  return v;
}

F2Vector F2Vector::unit(std::size_t length, std::size_t index) {
  F2Vector v(length);
  v.set(index, true);
  return v;
}

void F2Vector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

bool F2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Vector::popcount() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> F2Vector::leading() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return std::nullopt;
}

bool F2Vector::dot(const F2Vector& other) const {
  if (other.length_ != length_) throw std::invalid_argument("F2Vector::dot: length mismatch");
  int parity = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) parity ^= std::popcount(words_[k] & other.words_[k]) & 1;
  return parity != 0;
}

F2Vector& F2Vector::operator+=(const F2Vector& other) {
  if (other.length_ != length_) throw std::invalid_argument("F2Vector: length mismatch in addition");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string F2Vector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < length_; ++i) {
    if (i != 0) s += ',';
    s += get(i) ? '1' : '0';
  }
  return s + "]";
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, F2Vector(cols)), cols_(cols) {}

F2Matrix::F2Matrix(std::vector<F2Vector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw std::invalid_argument("F2Matrix: ragged rows");
  }
}

F2Matrix F2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<F2Vector> packed;
  packed.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("F2Matrix: ragged rows");
    packed.push_back(F2Vector::from_bits(r));
  }
  return {std::move(packed), cols};
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Vector F2Matrix::column(std::size_t c) const {
  F2Vector v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) v.set(r, rows_[r].get(c));
  return v;
}

void F2Matrix::append_row(F2Vector v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("F2Matrix::append_row: length mismatch");
  rows_.push_back(std::move(v));
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r].get(c)) t.set(c, r, true);
    }
  }
  return t;
}

F2Vector operator*(const F2Matrix& m, const F2Vector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("F2Matrix * F2Vector: dimension mismatch");
  F2Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, m.row(r).dot(v));
  return out;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("F2Matrix * F2Matrix: dimension mismatch");
  std::vector<F2Vector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    F2Vector acc(b.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) acc += b.row(k);
    }
    rows.push_back(std::move(acc));
  }
  return {std::move(rows), b.cols()};
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("F2Matrix + F2Matrix: shape mismatch");
  std::vector<F2Vector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r) + b.row(r));
  return {std::move(rows), a.cols()};
}

RowReduction row_reduce(const F2Matrix& m) {
  std::vector<F2Vector> rows = m.row_list();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t r = next;
    while (r < rows.size() && !rows[r].get(c)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(c)) rows[i] += rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return {F2Matrix(std::move(rows), m.cols()), std::move(pivots)};
}

std::size_t rank(const F2Matrix& m) {
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_list()) basis.insert(r);
  return basis.rank();
}

bool in_span(const F2Vector& v, const F2Matrix& m) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_span: length mismatch");
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_list()) basis.insert(r);
  return basis.contains(v);
}

bool EchelonBasis::insert(F2Vector v) {
  v = reduce(std::move(v));
  const auto lead = v.leading();
  if (!lead) return false;
  // keep the basis fully reduced: clear the new pivot from existing rows
  for (auto& [pivot, row] : rows_) {
    if (row.get(*lead)) row += v;
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), *lead,
                              [](const auto& entry, std::size_t p) { return entry.first < p; });
  rows_.insert(pos, {*lead, std::move(v)});
  return true;
}

F2Vector EchelonBasis::reduce(F2Vector v) const {
  if (v.size() != length_) throw std::invalid_argument("EchelonBasis: length mismatch");
  for (const auto& [pivot, row] : rows_) {
    if (v.get(pivot)) v += row;
  }
  return v;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& entry : rows_) out.push_back(entry.first);
  return out;
}

F2Matrix EchelonBasis::matrix() const {
  std::vector<F2Vector> rows;
  rows.reserve(rows_.size());
  for (const auto& entry : rows_) rows.push_back(entry.second);
  return {std::move(rows), length_};
}

}  // namespace torelli::gf2
