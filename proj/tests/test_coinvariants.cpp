#include <doctest.h>

#include <algorithm>
#include <set>

#include "torelli/bcj.hpp"
#include "torelli/coinvariants.hpp"
#include "torelli/sampling.hpp"

using namespace torelli;
using gf2::F2Matrix;
using gf2::F2Vector;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

std::size_t index_of(const ActionPresentation& act, const std::string& label) {
  const auto it = std::find(act.labels.begin(), act.labels.end(), label);
  REQUIRE(it != act.labels.end());
  return static_cast<std::size_t>(it - act.labels.begin());
}

F2Vector basis_vector(const ActionPresentation& act, const std::string& label) {
  return F2Vector::unit(act.dimension(), index_of(act, label));
}

F2Matrix random_invertible(std::size_t n, Rng& rng) {
  for (;;) {
    F2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1u);
    }
    if (gf2::rank(m) == n) return m;
  }
}

std::string key(const F2Matrix& m) {
  std::string s;
  for (const auto& r : m.row_list()) s += r.to_string();
  return s;
}

// Closure of the generators under multiplication (a finite group), and the
// dimension of M / span{h v - v : h in the group, v in M} by enumerating
// the relation span.
std::size_t brute_force_quotient(const std::vector<F2Matrix>& gens, std::size_t n) {
  std::vector<F2Matrix> group = {F2Matrix::identity(n)};
  std::set<std::string> seen = {key(group[0])};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      F2Matrix h = g * group[i];
      if (seen.insert(key(h)).second) group.push_back(std::move(h));
    }
  }
  std::set<std::uint64_t> span = {0};
  for (const auto& h : group) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
      F2Vector x(n);
      for (std::size_t c = 0; c < n; ++c) x.set(c, (v >> c) & 1u);
      const F2Vector r = h * x + x;
      std::uint64_t bits = 0;
      for (std::size_t c = 0; c < n; ++c) bits |= std::uint64_t{r.get(c)} << c;
      std::vector<std::uint64_t> add;
      if (!span.count(bits)) {
        for (auto s : span) add.push_back(s ^ bits);
        span.insert(add.begin(), add.end());
      }
    }
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return n - rank;
}

}  // namespace

TEST_CASE("trivial and swap actions") {
  const ActionPresentation trivial{labels(3), {F2Matrix::identity(3)}};
  const CoinvariantResult t = coinvariants(trivial);
  CHECK(t.quotient_dimension() == 3);
  CHECK(t.module_dimension() == 3);

  const ActionPresentation swap{labels(2), {F2Matrix::from_rows({{0, 1}, {1, 0}})}};
  const CoinvariantResult s = coinvariants(swap);
  CHECK(s.quotient_dimension() == 1);
  CHECK(s.relations().rank() == 1);
  CHECK(s.relations().contains(F2Vector::from_bits({1, 1})));
  CHECK(s.representative_labels() == std::vector<std::string>{"e1"});
  CHECK(s.reduce(F2Vector::from_bits({0, 1})) == F2Vector::from_bits({1}));
  CHECK(s.reduce(F2Vector::from_bits({1, 1})).is_zero());
  CHECK(brute_force_quotient(swap.generators, 2) == 1);
}

TEST_CASE("invalid presentations") {
  CHECK_THROWS_AS(coinvariants(ActionPresentation{labels(2), {F2Matrix::identity(3)}}), std::invalid_argument);
  CHECK_THROWS_AS(coinvariants(ActionPresentation{labels(2), {F2Matrix::from_rows({{1, 1}, {1, 1}})}}),
                  std::invalid_argument);
  CHECK_THROWS(gl_action_on_boolean(1, 1));
  CHECK_THROWS(gl_action_on_boolean(9, 1));
  CHECK_THROWS(gl_action_on_boolean(3, 7));
  CHECK_THROWS(gl_action_on_lambda3(1));
  CHECK_THROWS(verify_lemma_coinvariants(2));
}

TEST_CASE("presentation sizes") {
  const ActionPresentation b31 = gl_action_on_boolean(3, 1);
  CHECK(b31.dimension() == 7);
  CHECK(b31.generators.size() == 6);
  CHECK(gl_action_on_boolean(4, 3).dimension() == 93);
  for (const auto& m : gl_action_on_boolean(4, 3).generators) CHECK(m.column(0) == F2Vector::unit(93, 0));
  CHECK(gl_action_on_lambda3(3).dimension() == 20);
  CHECK(gl_action_on_lambda3(4).dimension() == 56);
  for (const auto& l : gl_action_on_lambda3(3).labels) {
    std::set<std::string> factors;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos <= l.size(); ++pos) {
      if (pos == l.size() || l[pos] == '^') {
        factors.insert(l.substr(start, pos - start));
        start = pos + 1;
      }
    }
    CHECK(factors.size() == 3);
  }
  CHECK(gl_transvections(4).size() == 12);
}

TEST_CASE("generation independence against orbit closure") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<F2Matrix> gens;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) gens.push_back(random_invertible(n, rng));
    const std::size_t expected = brute_force_quotient(gens, n);
    CHECK(coinvariants(ActionPresentation{labels(n), gens}).quotient_dimension() == expected);

    std::vector<F2Matrix> more = gens;
    more.push_back(gens[0] * gens.back());
    F2Matrix inv = gens[0];  // gens[0]^{-1} as a power of gens[0]
    for (F2Matrix p = gens[0] * gens[0]; !(p == F2Matrix::identity(n)); p = gens[0] * p) inv = p;
    if (!(gens[0] == F2Matrix::identity(n))) more.push_back(inv);
    CHECK(inv * gens[0] == F2Matrix::identity(n));
    CHECK(coinvariants(ActionPresentation{labels(n), more}).quotient_dimension() == expected);
  }
}

TEST_CASE("degree-2 coinvariants at genus 3") {
  const CoinvariantResult r = coinvariants(gl_action_on_boolean(3, 2));
  CHECK(r.quotient_dimension() == 2);
  CHECK(r.representative_labels() == std::vector<std::string>{"1", "a1*b1"});
}

TEST_CASE("lemma table") {
  for (int g : {4, 5}) {
    const CoinvariantTable table = verify_lemma_coinvariants(g);
    CHECK(table.ok());
    REQUIRE(table.rows.size() == 4);
    const std::size_t dims[4] = {1, 1, 2, 1};
    for (int k = 0; k < 4; ++k) {
      CHECK(table.rows[k].degree == k);
      CHECK(table.rows[k].dimension == dims[k]);
      CHECK(table.rows[k].asserted());
    }
    CHECK(table.rows[2].representatives == std::vector<std::string>{"1", "a1*b1"});
    CHECK(table.rows[3].representatives == std::vector<std::string>{"1"});
  }
  const CoinvariantTable g3 = verify_lemma_coinvariants(3);
  CHECK(g3.ok());
  CHECK(g3.rows[2].dimension == 2);
  CHECK(g3.rows[2].asserted());
  CHECK_FALSE(g3.rows[3].asserted());
}

TEST_CASE("individual proof steps") {
  const int g = 3;
  const ActionPresentation act = gl_action_on_boolean(g, 1);
  const CoinvariantResult r = coinvariants(act);
  const SpMatrix e21 = gl_embed<Integer>(GLMatrix(GLMatrix::Identity(g, g) + elementary<Integer>(g, 2, 1)));
  const BoolElement a1(g, {parse_monomial("a1", g)});
  const BoolElement diff = sp_action(e21, a1) + a1;
  CHECK(diff == BoolElement(g, {parse_monomial("a2", g)}));
  CHECK(r.relations().contains(basis_vector(act, "a2")));

  // at g = 4, abar_1 bbar_1 dies in the degree-3 coinvariants
  const ActionPresentation b3 = gl_action_on_boolean(4, 3);
  const CoinvariantResult r3 = coinvariants(b3);
  CHECK(quotient_class(r3, basis_vector(b3, "a1*b1")).is_zero());
  CHECK(quotient_class(r3, F2Vector(b3.dimension())).is_zero());
  const F2Matrix rel3 = r3.relations().matrix();
  for (const auto& row : rel3.row_list()) CHECK(quotient_class(r3, row).is_zero());

  // every degree-3 monomial vanishes modulo lower degree once g >= 4
  const ActionPresentation graded = gl_action_on_boolean_graded(4, 3);
  const CoinvariantResult rg = coinvariants(graded);
  CHECK(rg.quotient_dimension() == 0);
}

TEST_CASE("quotient map is linear with kernel the relations") {
  const ActionPresentation act = gl_action_on_boolean(3, 2);
  const CoinvariantResult r = coinvariants(act);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    F2Vector u(act.dimension()), v(act.dimension());
    for (std::size_t i = 0; i < act.dimension(); ++i) {
      u.set(i, rng() & 1u);
      v.set(i, rng() & 1u);
    }
    CHECK(r.reduce(u + v) == r.reduce(u) + r.reduce(v));
    CHECK(r.reduce(u).is_zero() == r.relations().contains(u));
    for (const auto& g : act.generators) CHECK(r.reduce(g * u + u).is_zero());
  }
  CHECK_THROWS(r.reduce(F2Vector(3)));
}

TEST_CASE("pi0 factors through the degree-3 coinvariants") {
  for (int g : {4, 5}) {
    const ActionPresentation act = gl_action_on_boolean(g, 3);
    const CoinvariantResult r = coinvariants(act);
    REQUIRE(r.quotient_dimension() == 1);
    // constant coefficient is the coordinate of the monomial 1
    const std::size_t one = index_of(act, "1");
    const F2Matrix rel = r.relations().matrix();
    REQUIRE(rel.rows() == act.dimension() - 1);
    for (const auto& row : rel.row_list()) REQUIRE_FALSE(row.get(one));
    for (std::size_t i = 0; i < act.dimension(); ++i) {
      const BoolElement m(g, {parse_monomial(act.labels[i], g)});
      CHECK(r.reduce(F2Vector::unit(act.dimension(), i)).get(0) == pi0(m));
    }
  }
}

TEST_CASE("Lambda3 coinvariants") {
  for (int g : {3, 4, 5}) {
    const std::size_t lambda = coinvariants(gl_action_on_lambda3(g)).quotient_dimension();
    const std::size_t graded = coinvariants(gl_action_on_boolean_graded(g, 3)).quotient_dimension();
    CHECK(lambda == graded);
    if (g >= 4) CHECK(lambda == 0);
  }
}

TEST_CASE("determinism") {
  const CoinvariantResult r1 = coinvariants(gl_action_on_boolean(4, 3));
  const CoinvariantResult r2 = coinvariants(gl_action_on_boolean(4, 3));
  CHECK(r1.representatives() == r2.representatives());
  CHECK(r1.relations().matrix() == r2.relations().matrix());
}
