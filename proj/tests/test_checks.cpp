#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "torelli/bcj.hpp"
#include "torelli/checks.hpp"
#include "torelli/word_io.hpp"

using namespace torelli;

#ifndef TORELLI_TEST_DIR
#define TORELLI_TEST_DIR "tests"
#endif

namespace {

FreeGroupWord gen(int rank, int i, int e = 1) { return FreeGroupWord::generator(rank, i, e); }

// Mod-2 classes supported on the given handles, as integral 0/1 vectors.
std::vector<HClass> classes_on(int g, std::initializer_list<int> handles) {
  std::vector<int> coords;
  for (int h : handles) {
    coords.push_back(h - 1);
    coords.push_back(g + h - 1);
  }
  std::vector<HClass> out;
  for (std::uint32_t m = 0; m < (1u << coords.size()); ++m) {
    HClass x = HClass::Zero(2 * g);
    for (std::size_t i = 0; i < coords.size(); ++i) x(coords[i]) = (m >> i) & 1u;
    out.push_back(x);
  }
  return out;
}

bool odd(Integer v) { return v % 2 != 0; }

HClass mod2(HClass x) {
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = ((x(k) % 2) + 2) % 2;
  return x;
}

BoolElement bp_sigma(const HClass& e, const SymplecticPairList& pairs) {
  const int g = genus_of(e);
  BoolElement s(g);
  for (const auto& p : pairs) s += bar(p.c) * bar(p.d);
  return s * (bar(e) + BoolElement::one(g));
}

// sigma values of every genus-1 bounding pair with [beta] = e whose
// subsurface lies on the given handles, over all mod-2 choices of (c, d).
std::map<std::string, BoolElement> genus1_bp_values(const HClass& e, std::initializer_list<int> handles) {
  const int g = genus_of(e);
  std::map<std::string, BoolElement> out;
  const auto cls = classes_on(g, handles);
  for (const auto& c : cls) {
    for (const auto& d : cls) {
      if (!odd(omega(c, d)) || odd(omega(e, c)) || odd(omega(e, d))) continue;
      const BoolElement v = bp_sigma(e, {{c, d}});
      out.emplace(v.to_string(), v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("S_g(Z) lifts") {
  for (int g : {2, 3, 4}) {
    const CheckReport r = verify_sg_lifts(g);
    CHECK(r.passed());
    CHECK(r.items.size() == static_cast<std::size_t>(g + g * (g - 1) / 2));
  }
  CHECK(same<Integer>(psi_of_word(lift_word_diagonal(2, 1)), lower_unipotent<Integer>(elementary<Integer>(2, 1, 1))));
  CHECK(same<Integer>(psi_of_word(lift_word_symmetric(3, 1, 2)),
                      lower_unipotent<Integer>(symmetric_elementary<Integer>(3, 1, 2))));
  CHECK(verify_sg_lifts(4).items.back().name == "SE34");
}

TEST_CASE("IA relation") {
  const FreeAutomorphism f = ia_f(3);
  CHECK(f.image(3) == gen(3, 3) * gen(3, 2));
  CHECK(is_inverse(f, ia_f_inverse(3)));
  const FreeAutomorphism lhs = compose(compose(f, conjugation_automorphism(3, 1, 3)), ia_f_inverse(3));
  CHECK(lhs.image(1).to_string() == "a3*a2*a1*a2^-1*a3^-1");
  CHECK(lhs == compose(conjugation_automorphism(3, 1, 2), conjugation_automorphism(3, 1, 3)));

  CHECK(verify_ia_relation(3).passed());
  CHECK(verify_ia_relation(4).passed());
  CHECK_THROWS(verify_ia_relation(2));

  // f(alpha3) = alpha2 alpha3 instead
  std::vector<FreeGroupWord> images = {gen(3, 1), gen(3, 2), gen(3, 2) * gen(3, 3)};
  std::vector<FreeGroupWord> inverse = {gen(3, 1), gen(3, 2), gen(3, 2, -1) * gen(3, 3)};
  const CheckReport bad = verify_ia_relation(3, FreeAutomorphism(images), FreeAutomorphism(inverse));
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.first_failure().has_value());
  CHECK(bad.first_failure()->name == "alpha1");
}

TEST_CASE("Luft conjugation identity") {
  // (Id + E43) SE13 (Id + E34) = SE13 + SE14
  const int g = 4;
  const GLMatrix id = GLMatrix::Identity(g, g);
  const GLMatrix lhs = (id + elementary<Integer>(g, 4, 3)) * symmetric_elementary<Integer>(g, 1, 3) *
                       (id + elementary<Integer>(g, 3, 4));
  CHECK(same<Integer>(lhs, GLMatrix(symmetric_elementary<Integer>(g, 1, 3) + symmetric_elementary<Integer>(g, 1, 4))));

  const SpMatrix psi = luft_psi_f(4);
  CHECK(same<Integer>(GLMatrix(psi.topLeftCorner(4, 4)), GLMatrix(id - elementary<Integer>(g, 3, 4))));
  CHECK(same<Integer>(GLMatrix(psi.bottomRightCorner(4, 4)), GLMatrix(id + elementary<Integer>(g, 4, 3))));

  CHECK(verify_luft_conjugation(4).passed());
  CHECK(verify_luft_conjugation(5).passed());
  CHECK_THROWS(verify_luft_conjugation(3));
  const SpMatrix flipped = gl_embed<Integer>(GLMatrix(id + elementary<Integer>(g, 3, 4)));
  CHECK_FALSE(verify_luft_conjugation(4, flipped).passed());
}

TEST_CASE("lantern relations") {
  const CheckReport r = verify_lantern_sigma(4);
  CHECK(r.passed());
  std::set<std::string> names;
  for (const auto& i : r.items) names.insert(i.name);
  CHECK(names.count("zeta lantern"));
  CHECK(names.count("xi lantern"));
  CHECK(names.count("combined identity"));
  CHECK(names.count("psi trivial"));
  CHECK(verify_lantern_sigma(5).passed());
  CHECK_THROWS(verify_lantern_sigma(3));

  LanternData broken = lantern_assignment(4);
  broken.xi[2] = make_bp(b_class(4, 3), {{a_class(4, 1), b_class(4, 1)}, {a_class(4, 2), b_class(4, 2)}});
  const CheckReport bad = verify_lantern_sigma(broken);
  CHECK_FALSE(bad.passed());
  CHECK(bad.first_failure()->name == "xi lantern");
}

TEST_CASE("lantern assignment against bounded search") {
  const int g = 4;
  const LanternData d = lantern_assignment(g);
  const HClass b1 = b_class(g, 1), b2 = b_class(g, 2), b3 = b_class(g, 3), b4 = b_class(g, 4);
  const BoolElement gamma = sigma_spec(d.gamma);

  // zeta side: every mod-2 choice of the genus-1 piece gives one sigma value
  const HClass zeta_e[3] = {b2, b1, HClass(b1 + b2)};
  for (int i = 0; i < 3; ++i) {
    const auto values = genus1_bp_values(zeta_e[i], {1, 2});
    REQUIRE(values.size() == 1);
    CHECK(sigma_spec(d.zeta[i]) == values.begin()->second);
  }

  // over all ordered triples of distinct nonzero classes on handles 1, 2
  // summing to zero, the zeta lantern holds exactly when the classes pair
  // trivially mod 2, i.e. span a Lagrangian plane (15 planes, 6 orders each)
  const auto cls = classes_on(g, {1, 2});
  int solutions = 0;
  for (const auto& e1 : cls) {
    for (const auto& e2 : cls) {
      if (reduce_mod2(e1).is_zero() || reduce_mod2(e2).is_zero() || same(e1, e2)) continue;
      const HClass e3 = mod2(HClass(e1 + e2));
      const auto v1 = genus1_bp_values(e1, {1, 2}), v2 = genus1_bp_values(e2, {1, 2}), v3 = genus1_bp_values(e3, {1, 2});
      REQUIRE(v1.size() == 1);
      const bool holds = v2.begin()->second + v1.begin()->second + v3.begin()->second == gamma;
      CHECK(holds == !odd(omega(e1, e2)));
      if (holds) ++solutions;
    }
  }
  CHECK(solutions == 90);
  CHECK_FALSE(odd(omega(b2, b1)));

  // xi side: every symplectic basis of handles 1, 2 gives the same value
  std::set<std::string> xi_values[3];
  const HClass xi_e[3] = {b3, b4, HClass(b3 + b4)};
  for (const auto& c1 : cls) {
    for (const auto& d1 : cls) {
      if (!odd(omega(c1, d1))) continue;
      for (const auto& c2 : cls) {
        if (odd(omega(c1, c2)) || odd(omega(d1, c2))) continue;
        for (const auto& d2 : cls) {
          if (!odd(omega(c2, d2)) || odd(omega(c1, d2)) || odd(omega(d1, d2))) continue;
          for (int i = 0; i < 3; ++i) xi_values[i].insert(bp_sigma(xi_e[i], {{c1, d1}, {c2, d2}}).to_string());
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    REQUIRE(xi_values[i].size() == 1);
    CHECK(sigma_spec(d.xi[i]).to_string() == *xi_values[i].begin());
  }
}

TEST_CASE("lantern golden file") {
  const LanternData d = lantern_assignment(4);
  nlohmann::json rendered = {{"genus", d.genus}, {"gamma", spec_to_json(d.gamma)}};
  for (int i = 0; i < 3; ++i) {
    rendered["zeta"].push_back(spec_to_json(d.zeta[i]));
    rendered["xi"].push_back(spec_to_json(d.xi[i]));
  }
  std::ifstream in(std::string(TORELLI_TEST_DIR) + "/golden/lantern_g4.json");
  REQUIRE(in.good());
  const nlohmann::json golden = nlohmann::json::parse(in);
  CHECK(rendered == golden);
}

TEST_CASE("equivariance and coinvariant reports") {
  CHECK(verify_equivariance(3, 100, 7).passed());
  CHECK(verify_equivariance(4, 100, 8).passed());
  CHECK(verify_lemma_coinvariants_report(4).passed());
  CHECK(verify_lemma_coinvariants_report(3).passed());
}
