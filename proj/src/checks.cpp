#include "torelli/checks.hpp"

#include <sstream>
#include <stdexcept>

#include "torelli/bcj.hpp"
#include "torelli/coinvariants.hpp"
#include "torelli/sampling.hpp"

namespace torelli {

namespace {

std::string matrix_text(const SpMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

void require_genus(int g, int min, const char* what) {
  if (g < min) throw std::out_of_range(std::string(what) + ": genus must be at least " + std::to_string(min));
}

TorelliWord word_of(int g, std::initializer_list<GeneratorSpec> letters) { return TorelliWord{g, letters}; }

}  // namespace

TorelliWord lift_word_diagonal(int g, int i) { return word_of(g, {make_twist(b_class(g, i), -1)}); }

TorelliWord lift_word_symmetric(int g, int i, int j) {
  return word_of(g, {make_twist(b_class(g, i), -1), make_twist(HClass(b_class(g, i) - b_class(g, j)), 1),
                     make_twist(b_class(g, j), -1)});
}

CheckReport verify_sg_lifts(int g) {
  require_genus(g, 1, "verify_sg_lifts");
  CheckReport report{"sg-lifts", {}};
  for (int i = 1; i <= g; ++i) {
    const SpMatrix expected = lower_unipotent<Integer>(elementary<Integer>(g, i, i));
    const SpMatrix got = psi_of_word(lift_word_diagonal(g, i));
    report.add("E" + std::to_string(i) + std::to_string(i), same(got, expected), got == expected ? "" : matrix_text(got));
  }
  for (int i = 1; i <= g; ++i) {
    for (int j = i + 1; j <= g; ++j) {
      const SpMatrix expected = lower_unipotent<Integer>(symmetric_elementary<Integer>(g, i, j));
      const SpMatrix got = psi_of_word(lift_word_symmetric(g, i, j));
      report.add("SE" + std::to_string(i) + std::to_string(j), same(got, expected),
                 got == expected ? "" : matrix_text(got));
    }
  }
  return report;
}

FreeAutomorphism ia_f(int rank) {
  require_genus(rank, 3, "ia_f");
  std::vector<FreeGroupWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeGroupWord::generator(rank, k));
  images[2] = FreeGroupWord(rank, {{3, 1}, {2, 1}});
  return FreeAutomorphism(std::move(images));
}

FreeAutomorphism ia_f_inverse(int rank) {
  require_genus(rank, 3, "ia_f_inverse");
  std::vector<FreeGroupWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeGroupWord::generator(rank, k));
  images[2] = FreeGroupWord(rank, {{3, 1}, {2, -1}});
  return FreeAutomorphism(std::move(images));
}

CheckReport verify_ia_relation(int g) { return verify_ia_relation(g, ia_f(g), ia_f_inverse(g)); }

CheckReport verify_ia_relation(int g, const FreeAutomorphism& f, const FreeAutomorphism& f_inv) {
  require_genus(g, 3, "verify_ia_relation");
  if (f.rank() != g || f_inv.rank() != g) throw std::invalid_argument("verify_ia_relation: rank mismatch");
  CheckReport report{"ia", {}};
  report.add("f invertible", is_inverse(f, f_inv));
  const FreeAutomorphism k12 = conjugation_automorphism(g, 1, 2);
  const FreeAutomorphism k13 = conjugation_automorphism(g, 1, 3);
  const FreeAutomorphism lhs = compose(f, compose(k13, f_inv));
  const FreeAutomorphism rhs = compose(k12, k13);
  for (int i = 1; i <= g; ++i) {
    const bool ok = lhs.image(i) == rhs.image(i);
    report.add("alpha" + std::to_string(i), ok,
               ok ? lhs.image(i).to_string() : lhs.image(i).to_string() + " != " + rhs.image(i).to_string());
  }
  return report;
}

SpMatrix luft_psi_f(int g) {
  require_genus(g, 4, "luft_psi_f");
  return gl_embed<Integer>(MatrixX<Integer>::Identity(g, g) - elementary<Integer>(g, 3, 4));
}

CheckReport verify_luft_conjugation(int g) { return verify_luft_conjugation(g, luft_psi_f(g)); }

CheckReport verify_luft_conjugation(int g, const SpMatrix& psi_f) {
  require_genus(g, 4, "verify_luft_conjugation");
  CheckReport report{"luft", {}};
  if (genus_of(psi_f) != g) throw std::invalid_argument("verify_luft_conjugation: genus mismatch");
  report.add("psi(f) symplectic", is_symplectic(psi_f));
  const MatrixX<Integer> se13 = symmetric_elementary<Integer>(g, 1, 3);
  const MatrixX<Integer> se14 = symmetric_elementary<Integer>(g, 1, 4);
  const SpMatrix l13 = psi_of_word(lift_word_symmetric(g, 1, 3));
  const SpMatrix l14 = psi_of_word(lift_word_symmetric(g, 1, 4));
  report.add("lift SE13", same(l13, lower_unipotent<Integer>(se13)));
  report.add("lift SE14", same(l14, lower_unipotent<Integer>(se14)));
  const SpMatrix conj = psi_f * l13 * symplectic_inverse(psi_f);
  const MatrixX<Integer> block = conj.bottomLeftCorner(g, g);
  const MatrixX<Integer> expected_block = se13 + se14;
  report.add("lower-left block is SE13 + SE14", same(block, expected_block),
             same(block, expected_block) ? "" : matrix_text(block));
  report.add("conjugate equals product", same(conj, SpMatrix(l13 * l14)));
  return report;
}

LanternData lantern_assignment(int g) {
  require_genus(g, 4, "lantern_assignment");
  const auto a = [g](int i) { return a_class(g, i); };
  const auto b = [g](int i) { return b_class(g, i); };
  LanternData d;
  d.genus = g;
  d.gamma = make_bscc({{a(1), b(1)}, {a(2), b(2)}});
  d.zeta[0] = make_bp(b(2), {{b(1), a(1)}});
  d.zeta[1] = make_bp(b(1), {{b(2), a(2)}});
  // integral dual to b1 orthogonal to b1 + b2
  d.zeta[2] = make_bp(HClass(b(1) + b(2)), {{b(1), HClass(a(1) - a(2))}});
  const SymplecticPairList left = {{a(1), b(1)}, {a(2), b(2)}};
  d.xi[0] = make_bp(b(3), left);
  d.xi[1] = make_bp(b(4), left);
  d.xi[2] = make_bp(HClass(b(3) + b(4)), left);
  return d;
}

CheckReport verify_lantern_sigma(int g) { return verify_lantern_sigma(lantern_assignment(g)); }

CheckReport verify_lantern_sigma(const LanternData& d) {
  require_genus(d.genus, 4, "verify_lantern_sigma");
  const int g = d.genus;
  CheckReport report{"lantern", {}};
  const auto check_letter = [&](const std::string& name, const GeneratorSpec& s) {
    const ValidationReport v = validate(s);
    report.add(name + " valid", v.ok(), v.violation);
  };
  check_letter("gamma", d.gamma);
  for (int i = 0; i < 3; ++i) check_letter("zeta" + std::to_string(i + 1), d.zeta[i]);
  for (int i = 0; i < 3; ++i) check_letter("xi" + std::to_string(i + 1), d.xi[i]);
  if (!report.passed()) return report;

  const TorelliWord gamma{g, {d.gamma}};
  const TorelliWord zeta_lhs{g, {d.zeta[1], d.zeta[0], d.zeta[2]}};
  const TorelliWord xi_lhs{g, {d.xi[0], d.xi[1], d.xi[2]}};
  const TorelliWord combined_lhs{g, {d.zeta[0]}};
  const TorelliWord combined_rhs{g, {d.zeta[1], d.zeta[2], d.xi[0], d.xi[1], d.xi[2]}};
  const auto compare = [&](const std::string& name, const TorelliWord& lhs, const TorelliWord& rhs) {
    const BoolElement l = sigma_word(lhs), r = sigma_word(rhs);
    report.add(name, l == r, l == r ? l.to_string() : l.to_string() + " != " + r.to_string());
  };
  compare("zeta lantern", zeta_lhs, gamma);
  compare("xi lantern", xi_lhs, gamma);
  compare("combined identity", combined_lhs, combined_rhs);
  const SpMatrix id = SpMatrix::Identity(2 * g, 2 * g);
  report.add("psi trivial", same(psi_of_word(zeta_lhs), id) && same(psi_of_word(xi_lhs), id) &&
                                same(psi_of_word(combined_rhs), id) && same(psi_of_word(gamma), id));
  return report;
}

CheckReport verify_equivariance(int g, int cases, std::uint64_t seed) {
  require_genus(g, 2, "verify_equivariance");
  CheckReport report{"equivariance", {}};
  Rng rng(seed);
  int failures = 0;
  std::string first;
  for (int k = 0; k < cases; ++k) {
    const SpMatrix f = random_symplectic(g, rng);
    const GeneratorSpec s = random_torelli_letter(g, rng);
    const bool ok = sigma_spec(transport(f, s)) == sp_action(f, sigma_spec(s));
    if (!ok && failures++ == 0) first = "case " + std::to_string(k) + ": " + describe(s);
  }
  report.add("g=" + std::to_string(g) + " cases=" + std::to_string(cases), failures == 0,
             failures == 0 ? "" : std::to_string(failures) + " failures, first " + first);
  return report;
}

CheckReport verify_lemma_coinvariants_report(int g) {
  CheckReport report{"lemma-coinv", {}};
  const CoinvariantTable table = verify_lemma_coinvariants(g);
  for (const auto& row : table.rows) {
    std::string reps;
    for (const auto& r : row.representatives) reps += (reps.empty() ? "" : ", ") + r;
    const std::string name = "B" + std::to_string(row.degree) + " dim " + std::to_string(row.dimension);
    if (row.asserted()) report.add(name, row.matches(), "{" + reps + "}");
  }
  const std::size_t lambda3 = coinvariants(gl_action_on_lambda3(g)).quotient_dimension();
  const std::size_t graded3 = coinvariants(gl_action_on_boolean_graded(g, 3)).quotient_dimension();
  report.add("Lambda3 H2 dim " + std::to_string(lambda3) + " = B3/B2 dim " + std::to_string(graded3), lambda3 == graded3);
  if (g >= 4) report.add("Lambda3 H2 coinvariants vanish", lambda3 == 0);
  return report;
}

}  // namespace torelli
