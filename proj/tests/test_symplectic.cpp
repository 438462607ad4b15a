#include <doctest.h>

#include <random>

#include "torelli/sampling.hpp"
#include "torelli/symplectic.hpp"
#include "torelli/words.hpp"

using namespace torelli;

namespace {

HClass random_class(int g, Rng& rng) {
  HClass x(2 * g);
  for (int i = 0; i < 2 * g; ++i) x(i) = static_cast<Integer>(rng() % 5) - 2;
  return x;
}

GLMatrix random_gl(int g, Rng& rng) {
  GLMatrix m = GLMatrix::Identity(g, g);
  for (int k = 0; k < 6; ++k) {
    const int i = 1 + static_cast<int>(rng() % g), j = 1 + static_cast<int>(rng() % g);
    if (i == j) continue;
    m = m * (GLMatrix::Identity(g, g) + ((rng() & 1u) ? 1 : -1) * elementary<Integer>(g, i, j));
  }
  return m;
}

}  // namespace

TEST_CASE("omega examples") {
  CHECK(omega(b_class(3, 1), a_class(3, 1)) == 1);
  CHECK(omega(a_class(3, 1), b_class(3, 1)) == -1);
  CHECK(omega(a_class(3, 1), a_class(3, 2)) == 0);
  CHECK(omega(b_class(3, 2), a_class(3, 1)) == 0);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const HClass x = random_class(3, rng), y = random_class(3, rng);
    CHECK(omega(x, x) == 0);
    CHECK(omega(x, y) == -omega(y, x));
  }
  CHECK_THROWS_AS(omega(a_class(2, 1), a_class(3, 1)), std::invalid_argument);
}

TEST_CASE("transvection examples") {
  Rng rng(2);
  const HClass x = random_class(3, rng);
  CHECK(same<Integer>(transvection_power<Integer>(x, 0), SpMatrix::Identity(6, 6)));

  const int g = 3;
  for (int k = 1; k <= g; ++k) {
    CHECK(same<Integer>(transvection_power<Integer>(b_class(g, k), -1),
                        lower_unipotent<Integer>(elementary<Integer>(g, k, k))));
  }

  const SpMatrix t = transvection_power<Integer>(a_class(g, 1), 1);
  CHECK(same<Integer>(HClass(t * b_class(g, 1)), HClass(b_class(g, 1) + a_class(g, 1))));
  for (int i = 1; i <= g; ++i) {
    CHECK(same<Integer>(HClass(t * a_class(g, i)), a_class(g, i)));
    if (i > 1) CHECK(same<Integer>(HClass(t * b_class(g, i)), b_class(g, i)));
  }
}

TEST_CASE("transvection formula and powers") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int g = 1 + static_cast<int>(rng() % 4);
    const HClass x = random_class(g, rng), y = random_class(g, rng);
    const Integer k = static_cast<Integer>(rng() % 7) - 3, m = static_cast<Integer>(rng() % 7) - 3;
    const SpMatrix tk = transvection_power<Integer>(x, k);
    CHECK(is_symplectic(tk));
    CHECK(same<Integer>(HClass(tk * y), HClass(y + k * omega(y, x) * x)));
    CHECK(same<Integer>(SpMatrix(tk * transvection_power<Integer>(x, m)), transvection_power<Integer>(x, k + m)));
  }
}

TEST_CASE("gl_embed examples and homomorphism") {
  CHECK(same<Integer>(gl_embed<Integer>(GLMatrix::Identity(3, 3)), SpMatrix::Identity(6, 6)));

  const SpMatrix e = gl_embed<Integer>(GLMatrix(GLMatrix::Identity(2, 2) + elementary<Integer>(2, 2, 1)));
  CHECK(same<Integer>(GLMatrix(e.bottomRightCorner(2, 2)),
                      GLMatrix(GLMatrix::Identity(2, 2) - elementary<Integer>(2, 1, 2))));

  GLMatrix p = GLMatrix::Zero(3, 3);
  p(0, 1) = p(1, 2) = p(2, 0) = 1;
  const SpMatrix ep = gl_embed<Integer>(p);
  CHECK(same<Integer>(GLMatrix(ep.topLeftCorner(3, 3)), p));
  CHECK(same<Integer>(GLMatrix(ep.bottomRightCorner(3, 3)), p));

  GLMatrix singular = GLMatrix::Identity(2, 2);
  singular(0, 0) = 2;
  CHECK_THROWS_AS(gl_embed<Integer>(singular), std::invalid_argument);

  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const GLMatrix a = random_gl(3, rng), b = random_gl(3, rng);
    CHECK(is_symplectic(gl_embed<Integer>(a)));
    CHECK(same<Integer>(gl_embed<Integer>(GLMatrix(a * b)), SpMatrix(gl_embed<Integer>(a) * gl_embed<Integer>(b))));
  }
}

TEST_CASE("reduce_mod2 examples") {
  CHECK(reduce_mod2(SpMatrix(SpMatrix::Identity(4, 4))) == gf2::F2Matrix::identity(4));
  const SpMatrix l = lower_unipotent<Integer>(elementary<Integer>(2, 1, 1));
  const gf2::F2Matrix l2 = reduce_mod2(l);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(l2.get(r, c) == (l(r, c) != 0));
  }
  const HClass x = HClass(a_class(2, 1) + b_class(2, 1));
  CHECK(reduce_mod2(transvection_power<Integer>(x, 2)) == gf2::F2Matrix::identity(4));
  SpMatrix neg = -SpMatrix::Identity(4, 4);
  CHECK(reduce_mod2(neg) == gf2::F2Matrix::identity(4));
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic(SpMatrix(SpMatrix::Identity(4, 4))));
  CHECK_FALSE(is_symplectic(SpMatrix(2 * SpMatrix::Identity(4, 4))));
  CHECK_THROWS_AS(is_symplectic(SpMatrix(SpMatrix::Identity(3, 3))), std::invalid_argument);
}

TEST_CASE("symplectic matrices preserve omega") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int g = 2 + static_cast<int>(rng() % 3);
    const SpMatrix m = random_symplectic(g, rng);
    REQUIRE(is_symplectic(m));
    const HClass x = random_class(g, rng), y = random_class(g, rng);
    CHECK(omega(HClass(m * x), HClass(m * y)) == omega(x, y));
    CHECK(same<Integer>(SpMatrix(m * symplectic_inverse(m)), SpMatrix(SpMatrix::Identity(2 * g, 2 * g))));
  }
}

TEST_CASE("mod-2 reduction preserves omega mod 2") {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const int g = 3;
    const SpMatrix m = random_symplectic(g, rng);
    const gf2::F2Matrix m2 = reduce_mod2(m);
    const HClass x = random_class(g, rng), y = random_class(g, rng);
    const gf2::F2Vector x2 = m2 * reduce_mod2(x), y2 = m2 * reduce_mod2(y);
    bool w = false;
    for (int i = 0; i < g; ++i) w ^= (x2.get(i) && y2.get(g + i)) ^ (x2.get(g + i) && y2.get(i));
    CHECK(w == (omega(x, y) % 2 != 0));
  }
}

TEST_CASE("lift of SE_ij") {
  // T_{b_i}^{-1} T_c T_{b_j}^{-1}: c = b_i - b_j gives +SE_ij, c = b_i + b_j gives -SE_ij.
  const int g = 4;
  for (int i = 1; i <= g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      const SpMatrix ti = transvection_power<Integer>(b_class(g, i), -1);
      const SpMatrix tj = transvection_power<Integer>(b_class(g, j), -1);
      const SpMatrix minus = ti * transvection_power<Integer>(HClass(b_class(g, i) - b_class(g, j)), 1) * tj;
      const SpMatrix plus = ti * transvection_power<Integer>(HClass(b_class(g, i) + b_class(g, j)), 1) * tj;
      const GLMatrix se = symmetric_elementary<Integer>(g, i, j);
      CHECK(same<Integer>(minus, lower_unipotent<Integer>(se)));
      CHECK(same<Integer>(plus, lower_unipotent<Integer>(GLMatrix(-se))));
      CHECK(reduce_mod2(minus) == reduce_mod2(plus));
    }
  }
}

TEST_CASE("stabilization of classes and matrices") {
  Rng rng(8);
  const SpMatrix m = random_symplectic(2, rng);
  const SpMatrix s = stabilize_matrix(m, 4);
  CHECK(is_symplectic(s));
  const HClass x = random_class(2, rng);
  CHECK(same<Integer>(HClass(s * stabilize_class(x, 4)), stabilize_class(HClass(m * x), 4)));
  CHECK(same<Integer>(HClass(s * a_class(4, 3)), a_class(4, 3)));
  CHECK(same<Integer>(HClass(s * b_class(4, 4)), b_class(4, 4)));
  CHECK_THROWS_AS(stabilize_class(x, 1), std::invalid_argument);
}

TEST_CASE("handle swap and rendering") {
  const SpMatrix h = handle_swap(3, 1, 2);
  CHECK(is_symplectic(h));
  CHECK(same<Integer>(HClass(h * a_class(3, 1)), a_class(3, 2)));
  CHECK(same<Integer>(HClass(h * b_class(3, 2)), b_class(3, 1)));
  CHECK(to_string(HClass(2 * a_class(3, 1) - b_class(3, 3))) == "2*a1 - b3");
}

TEST_CASE("integer determinant and inverse") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const GLMatrix a = random_gl(4, rng);
    const Integer det = integer_determinant(a);
    CHECK((det == 1 || det == -1));
    CHECK(same<Integer>(GLMatrix(a * unimodular_inverse(a)), GLMatrix(GLMatrix::Identity(4, 4))));
  }
  GLMatrix m(2, 2);
  m << 2, 1, 1, 1;
  CHECK(integer_determinant(m) == 1);
  m << 1, 2, 2, 4;
  CHECK(integer_determinant(m) == 0);
}
