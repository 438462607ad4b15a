#pragma once

// First homology of a genus-g surface with one boundary component, its
// intersection form, and integral symplectic matrices.
//
// Coordinates are always in the order (a_1, ..., a_g, b_1, ..., b_g), and the
// form is fixed by omega(b_i, a_i) = 1 = -omega(a_i, b_i), all other basis
// pairings zero. Matrices act on column vectors. Handle indices in the public
// helpers are 1-based, as in a_1 ... a_g.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "torelli/gf2.hpp"

namespace torelli {

using Integer = std::int64_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Integral homology class in the symplectic basis; genus = size() / 2.
using HClass = VectorX<Integer>;
/// 2g x 2g integral matrix preserving omega.
using SpMatrix = MatrixX<Integer>;
/// g x g integral matrix with determinant +-1.
using GLMatrix = MatrixX<Integer>;

template <typename Scalar>
int genus_of(const VectorX<Scalar>& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("homology class has odd length");
  return static_cast<int>(x.size() / 2);
}

template <typename Scalar>
int genus_of(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("symplectic matrix must be square of even size");
  return static_cast<int>(m.rows() / 2);
}

/// Gram matrix of omega: omega(x, y) = x^T J y.
template <typename Scalar = Integer>
MatrixX<Scalar> omega_gram(int g) {
  MatrixX<Scalar> j = MatrixX<Scalar>::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = Scalar(-1);
    j(g + i, i) = Scalar(1);
  }
  return j;
}

template <typename Scalar>
Scalar omega(const VectorX<Scalar>& x, const VectorX<Scalar>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("omega: genus mismatch");
  const int g = genus_of(x);
  Scalar s(0);
  for (int i = 0; i < g; ++i) s += y(i) * x(g + i) - x(i) * y(g + i);
  return s;
}

template <typename Scalar = Integer>
VectorX<Scalar> a_class(int g, int i) {
  if (i < 1 || i > g) throw std::out_of_range("a_class: handle index out of range");
  VectorX<Scalar> v = VectorX<Scalar>::Zero(2 * g);
  v(i - 1) = Scalar(1);
  return v;
}

template <typename Scalar = Integer>
VectorX<Scalar> b_class(int g, int i) {
  if (i < 1 || i > g) throw std::out_of_range("b_class: handle index out of range");
  VectorX<Scalar> v = VectorX<Scalar>::Zero(2 * g);
  v(g + i - 1) = Scalar(1);
  return v;
}

/// E_ij of size n: a single 1 at (i, j), 1-based.
template <typename Scalar = Integer>
MatrixX<Scalar> elementary(int n, int i, int j) {
  MatrixX<Scalar> e = MatrixX<Scalar>::Zero(n, n);
  e(i - 1, j - 1) = Scalar(1);
  return e;
}

/// SE_ij = E_ij + E_ji.
template <typename Scalar = Integer>
MatrixX<Scalar> symmetric_elementary(int n, int i, int j) {
  return elementary<Scalar>(n, i, j) + elementary<Scalar>(n, j, i);
}

/// Action of the k-th power of the Dehn twist about a curve of class x:
/// y -> y + k * omega(y, x) * x.
template <typename Scalar>
MatrixX<Scalar> transvection_power(const VectorX<Scalar>& x, Scalar k) {
  const int g = genus_of(x);
  const VectorX<Scalar> jx = omega_gram<Scalar>(g) * x;
  // omega(y, x) = y^T J x = (J x)^T y
  return MatrixX<Scalar>::Identity(2 * g, 2 * g) + k * x * jx.transpose();
}

template <typename Scalar>
bool is_symplectic(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_symplectic: matrix is not square");
  if (m.rows() % 2 != 0) throw std::invalid_argument("is_symplectic: odd size");
  const int g = static_cast<int>(m.rows() / 2);
  const MatrixX<Scalar> j = omega_gram<Scalar>(g);
  return m.transpose() * j * m == j;
}

/// Exact inverse of a symplectic matrix: M^{-1} = -J M^T J.
template <typename Scalar>
MatrixX<Scalar> symplectic_inverse(const MatrixX<Scalar>& m) {
  const MatrixX<Scalar> j = omega_gram<Scalar>(genus_of(m));
  return -(j * m.transpose() * j);
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar integer_determinant(MatrixX<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == Scalar(0)) ++r;
      if (r == n) return Scalar(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Inverse of a unimodular integer matrix via the adjugate.
template <typename Scalar>
MatrixX<Scalar> unimodular_inverse(const MatrixX<Scalar>& g) {
  const Eigen::Index n = g.rows();
  const Scalar det = integer_determinant(g);
  if (det != Scalar(1) && det != Scalar(-1)) throw std::invalid_argument("matrix is not unimodular");
  if (n == 1) return MatrixX<Scalar>::Constant(1, 1, det);
  MatrixX<Scalar> inv(n, n);
  MatrixX<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = g(i, j);
        }
        ++mi;
      }
      const Scalar cofactor = ((r + c) % 2 == 0 ? Scalar(1) : Scalar(-1)) * integer_determinant(minor);
      inv(c, r) = cofactor * det;  // adj / det with det = +-1
    }
  }
  return inv;
}

/// diag(G, G^{-T}): the action of an element of GL_g(Z) on H.
template <typename Scalar>
MatrixX<Scalar> gl_embed(const MatrixX<Scalar>& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("gl_embed: matrix is not square");
  const Eigen::Index n = g.rows();
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = g;
  m.bottomRightCorner(n, n) = unimodular_inverse(g).transpose();
  return m;
}

/// [[Id, 0], [S, Id]]: the symplectic image of a symmetric g x g matrix S.
template <typename Scalar>
MatrixX<Scalar> lower_unipotent(const MatrixX<Scalar>& s) {
  const Eigen::Index n = s.rows();
  MatrixX<Scalar> m = MatrixX<Scalar>::Identity(2 * n, 2 * n);
  m.bottomLeftCorner(n, n) = s;
  return m;
}

/// Inclusion Sigma_{g,1} -> Sigma_{g',1}: zero-pads each Lagrangian block.
template <typename Scalar>
VectorX<Scalar> stabilize_class(const VectorX<Scalar>& x, int to_genus) {
  const int g = genus_of(x);
  if (to_genus < g) throw std::invalid_argument("stabilize: target genus smaller than source");
  VectorX<Scalar> y = VectorX<Scalar>::Zero(2 * to_genus);
  y.head(g) = x.head(g);
  y.segment(to_genus, g) = x.tail(g);
  return y;
}

/// Block extension by the identity on the new handles.
template <typename Scalar>
MatrixX<Scalar> stabilize_matrix(const MatrixX<Scalar>& m, int to_genus) {
  const int g = genus_of(m);
  if (to_genus < g) throw std::invalid_argument("stabilize: target genus smaller than source");
  MatrixX<Scalar> out = MatrixX<Scalar>::Identity(2 * to_genus, 2 * to_genus);
  const int blocks[2] = {0, to_genus};
  for (int br = 0; br < 2; ++br) {
    for (int bc = 0; bc < 2; ++bc) out.block(blocks[br], blocks[bc], g, g) = m.block(br * g, bc * g, g, g);
  }
  return out;
}

/// Handle permutation (i <-> j) acting on both Lagrangians.
SpMatrix handle_swap(int g, int i, int j);

/// Entrywise reduction modulo 2.
gf2::F2Matrix reduce_mod2(const SpMatrix& m);
gf2::F2Vector reduce_mod2(const HClass& x);

/// "2*a1 - b3" style rendering of a class.
std::string to_string(const HClass& x);

}  // namespace torelli
