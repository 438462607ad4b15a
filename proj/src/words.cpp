#include "torelli/words.hpp"

#include <stdexcept>

namespace torelli {

bool operator==(const Conj& lhs, const Conj& rhs) {
  if (!same(lhs.by, rhs.by)) return false;
  if (!lhs.inner || !rhs.inner) return lhs.inner == rhs.inner;
  return *lhs.inner == *rhs.inner;
}

GeneratorSpec make_bscc(SymplecticPairList pairs) { return {Bscc{std::move(pairs)}}; }

GeneratorSpec make_bp(HClass e, SymplecticPairList pairs) { return {BoundingPair{std::move(e), std::move(pairs)}}; }

GeneratorSpec make_twist(HClass x, Integer power) { return {Twist{std::move(x), power}}; }

GeneratorSpec make_conj(SpMatrix by, GeneratorSpec inner) {
  return {Conj{std::move(by), std::make_shared<const GeneratorSpec>(std::move(inner))}};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string pair_name(std::size_t i, bool second) { return std::string(second ? "d" : "c") + std::to_string(i + 1); }

// Empty string when the pairs form a symplectic basis of a subsurface.
std::string check_pairs(const SymplecticPairList& pairs, int g) {
  if (pairs.empty()) return "empty symplectic pair list";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].c.size() != 2 * g || pairs[i].d.size() != 2 * g) return "pair " + std::to_string(i + 1) + " has the wrong genus";
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Integer w = omega(pairs[i].c, pairs[i].d);
    if (w != 1 && w != -1)
      return "omega(" + pair_name(i, false) + ", " + pair_name(i, true) + ") = " + std::to_string(w) + ", expected +-1";
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const HClass* lhs[2] = {&pairs[i].c, &pairs[i].d};
      const HClass* rhs[2] = {&pairs[j].c, &pairs[j].d};
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          const Integer v = omega(*lhs[s], *rhs[t]);
          if (v != 0)
            return "omega(" + pair_name(i, s == 1) + ", " + pair_name(j, t == 1) + ") = " + std::to_string(v) + ", expected 0";
        }
      }
    }
  }
  return {};
}

bool is_standard_basis(const SymplecticPairList& pairs, int g) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int h = static_cast<int>(i) + 1;
    if (h > g || !same(pairs[i].c, a_class(g, h)) || !same(pairs[i].d, b_class(g, h))) return false;
  }
  return true;
}

SymplecticPairList standard_pairs(int g, int k) {
  SymplecticPairList pairs;
  for (int i = 1; i <= k; ++i) pairs.push_back({a_class(g, i), b_class(g, i)});
  return pairs;
}

}  // namespace

int genus_of(const GeneratorSpec& spec) {
  return std::visit(overloaded{
                        [](const Bscc& s) {
                          if (s.pairs.empty()) throw std::invalid_argument("BSCC letter without pairs");
                          return genus_of(s.pairs.front().c);
                        },
                        [](const BoundingPair& s) { return genus_of(s.e); },
                        [](const Twist& s) { return genus_of(s.x); },
                        [](const Conj& s) { return genus_of(s.by); },
                    },
                    spec.value);
}

bool is_torelli_letter(const GeneratorSpec& spec) {
  return std::visit(overloaded{
                        [](const Twist&) { return false; },
                        [](const Conj& s) { return s.inner && is_torelli_letter(*s.inner); },
                        [](const auto&) { return true; },
                    },
                    spec.value);
}

bool is_torelli_word(const TorelliWord& w) {
  for (const auto& l : w.letters) {
    if (!is_torelli_letter(l)) return false;
  }
  return true;
}

TorelliWord concatenate(const TorelliWord& lhs, const TorelliWord& rhs) {
  if (lhs.genus != rhs.genus) throw std::invalid_argument("concatenate: genus mismatch");
  TorelliWord out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

TorelliWord conjugate_word(const SpMatrix& f, const TorelliWord& w) {
  if (genus_of(f) != w.genus) throw std::invalid_argument("conjugate_word: genus mismatch");
  TorelliWord out{w.genus, {}};
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) out.letters.push_back(make_conj(f, l));
  return out;
}

ValidationReport validate(const GeneratorSpec& spec) {
  const std::string problem = std::visit(
      overloaded{
          [](const Bscc& s) -> std::string {
            if (s.pairs.empty()) return "BSCC: empty symplectic pair list";
            const std::string p = check_pairs(s.pairs, genus_of(s.pairs.front().c));
            return p.empty() ? p : "BSCC: " + p;
          },
          [](const BoundingPair& s) -> std::string {
            if (s.e.size() % 2 != 0) return "BP: class e has odd length";
            const int g = genus_of(s.e);
            if (const std::string p = check_pairs(s.pairs, g); !p.empty()) return "BP: " + p;
            if (reduce_mod2(s.e).is_zero()) return "BP: e is zero mod 2";
            for (std::size_t i = 0; i < s.pairs.size(); ++i) {
              if (const Integer v = omega(s.e, s.pairs[i].c); v != 0)
                return "BP: omega(e, " + pair_name(i, false) + ") = " + std::to_string(v) + ", expected 0";
              if (const Integer v = omega(s.e, s.pairs[i].d); v != 0)
                return "BP: omega(e, " + pair_name(i, true) + ") = " + std::to_string(v) + ", expected 0";
            }
            return {};
          },
          [](const Twist& s) -> std::string {
            if (s.x.size() == 0 || s.x.size() % 2 != 0) return "twist: class has invalid length";
            return {};
          },
          [](const Conj& s) -> std::string {
            if (!s.inner) return "conj: missing inner letter";
            if (s.by.rows() != s.by.cols() || s.by.rows() % 2 != 0) return "conj: matrix is not square of even size";
            if (!is_symplectic(s.by)) return "conj: matrix is not symplectic";
            const ValidationReport inner = validate(*s.inner);
            if (!inner.ok()) return "conj: " + inner.violation;
            if (genus_of(*s.inner) != genus_of(s.by)) return "conj: genus mismatch between matrix and inner letter";
            return {};
          },
      },
      spec.value);
  return {problem};
}

ValidationReport validate(const TorelliWord& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const ValidationReport r = validate(w.letters[i]);
    if (!r.ok()) return {"letter " + std::to_string(i) + ": " + r.violation};
    if (genus_of(w.letters[i]) != w.genus) return {"letter " + std::to_string(i) + ": genus differs from the word's genus"};
  }
  return {};
}

SpMatrix psi_of_spec(const GeneratorSpec& spec) {
  if (const ValidationReport r = validate(spec); !r.ok()) throw std::invalid_argument("invalid letter: " + r.violation);
  const int g = genus_of(spec);
  return std::visit(overloaded{
                        [&](const Twist& s) -> SpMatrix { return transvection_power(s.x, s.power); },
                        [&](const Conj& s) -> SpMatrix {
                          return s.by * psi_of_spec(*s.inner) * symplectic_inverse(s.by);
                        },
                        // Torelli letters act trivially on homology
                        [&](const auto&) -> SpMatrix { return SpMatrix::Identity(2 * g, 2 * g); },
                    },
                    spec.value);
}

SpMatrix psi_of_word(const TorelliWord& w) {
  SpMatrix m = SpMatrix::Identity(2 * w.genus, 2 * w.genus);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (genus_of(w.letters[i]) != w.genus)
      throw std::invalid_argument("letter " + std::to_string(i) + ": genus differs from the word's genus");
    m = m * psi_of_spec(w.letters[i]);
  }
  return m;
}

GeneratorSpec standard_bscc(int g, int k) {
  if (k < 1 || k > g) throw std::out_of_range("standard_bscc: need 1 <= k <= g");
  return make_bscc(standard_pairs(g, k));
}

GeneratorSpec standard_bp(int g, int k) {
  if (k < 1 || k > g - 1) throw std::out_of_range("standard_bp: need 1 <= k <= g - 1");
  return make_bp(b_class(g, k + 1), standard_pairs(g, k));
}

GeneratorSpec standard_bp_mirror(int g, int k) {
  if (k < 1 || k > g - 1) throw std::out_of_range("standard_bp_mirror: need 1 <= k <= g - 1");
  SymplecticPairList pairs;
  for (int i = 1; i <= k; ++i) pairs.push_back({b_class(g, i), a_class(g, i)});
  return make_bp(a_class(g, k + 1), std::move(pairs));
}

std::vector<GeneratorSpec> decompose_bp(const GeneratorSpec& spec) {
  const auto* bp = std::get_if<BoundingPair>(&spec.value);
  if (bp == nullptr || bp->pairs.empty()) throw std::invalid_argument("decompose_bp: not a bounding pair letter");
  const int g = genus_of(bp->e);
  const int k = static_cast<int>(bp->pairs.size());
  if (k + 1 > g || !is_standard_basis(bp->pairs, g) || !same(bp->e, b_class(g, k + 1)))
    throw std::invalid_argument("decompose_bp: only standard-position bounding pairs are supported");
  // zeta_0 = beta, ..., zeta_k = beta'; consecutive curves cut off one handle
  std::vector<GeneratorSpec> pieces;
  pieces.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) pieces.push_back(make_bp(bp->e, {{a_class(g, i), b_class(g, i)}}));
  return pieces;
}

GeneratorSpec stabilize_spec(const GeneratorSpec& spec, int to_genus) {
  auto pad_pairs = [&](const SymplecticPairList& pairs) {
    SymplecticPairList out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back({stabilize_class(p.c, to_genus), stabilize_class(p.d, to_genus)});
    return out;
  };
  return std::visit(overloaded{
                        [&](const Bscc& s) { return make_bscc(pad_pairs(s.pairs)); },
                        [&](const BoundingPair& s) { return make_bp(stabilize_class(s.e, to_genus), pad_pairs(s.pairs)); },
                        [&](const Twist& s) { return make_twist(stabilize_class(s.x, to_genus), s.power); },
                        [&](const Conj& s) {
                          return make_conj(stabilize_matrix(s.by, to_genus), stabilize_spec(*s.inner, to_genus));
                        },
                    },
                    spec.value);
}

TorelliWord stabilize_word(const TorelliWord& w, int to_genus) {
  if (to_genus < w.genus) throw std::invalid_argument("stabilize_word: target genus smaller than source");
  TorelliWord out{to_genus, {}};
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) out.letters.push_back(stabilize_spec(l, to_genus));
  return out;
}

std::string describe(const GeneratorSpec& spec) {
  auto pairs_text = [](const SymplecticPairList& pairs) {
    std::string s = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i != 0) s += ", ";
      s += "(" + to_string(pairs[i].c) + ", " + to_string(pairs[i].d) + ")";
    }
    return s + "}";
  };
  return std::visit(overloaded{
                        [&](const Bscc& s) { return "BSCC" + pairs_text(s.pairs); },
                        [&](const BoundingPair& s) { return "BP(e = " + to_string(s.e) + ", " + pairs_text(s.pairs) + ")"; },
                        [&](const Twist& s) { return "T[" + to_string(s.x) + "]^" + std::to_string(s.power); },
                        [&](const Conj& s) { return "conj(" + describe(*s.inner) + ")"; },
                    },
                    spec.value);
}

}  // namespace torelli
