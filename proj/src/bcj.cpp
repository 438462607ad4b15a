#include "torelli/bcj.hpp"

#include <stdexcept>

namespace torelli {

namespace {

BoolElement pair_sum(const SymplecticPairList& pairs, int g) {
  BoolElement s(g);
  for (const auto& p : pairs) s += bar(p.c) * bar(p.d);
  return s;
}

BoolElement sigma_unchecked(const GeneratorSpec& spec) {
  if (const auto* s = std::get_if<Bscc>(&spec.value)) return pair_sum(s->pairs, genus_of(spec));
  if (const auto* s = std::get_if<BoundingPair>(&spec.value)) {
    const int g = genus_of(s->e);
    return pair_sum(s->pairs, g) * (bar(s->e) + BoolElement::one(g));
  }
  if (const auto* s = std::get_if<Conj>(&spec.value)) {
    return Mod2Action(reduce_mod2(s->by)).apply(sigma_unchecked(*s->inner));
  }
  throw std::invalid_argument("sigma is only defined on Torelli letters, got " + describe(spec));
}

SymplecticPairList map_pairs(const SpMatrix& f, const SymplecticPairList& pairs) {
  SymplecticPairList out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({f * p.c, f * p.d});
  return out;
}

}  // namespace

BoolElement sigma_spec(const GeneratorSpec& spec) {
  if (!is_torelli_letter(spec)) throw std::invalid_argument("sigma is only defined on Torelli letters, got " + describe(spec));
  if (const ValidationReport r = validate(spec); !r.ok()) throw std::invalid_argument("invalid letter: " + r.violation);
  return sigma_unchecked(spec);
}

BoolElement sigma_word(const TorelliWord& w) {
  BoolElement s(w.genus);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (genus_of(w.letters[i]) != w.genus)
      throw std::invalid_argument("letter " + std::to_string(i) + ": genus differs from the word's genus");
    s += sigma_spec(w.letters[i]);
  }
  return s;
}

GeneratorSpec transport(const SpMatrix& f, const GeneratorSpec& spec) {
  if (genus_of(f) != genus_of(spec)) throw std::invalid_argument("transport: genus mismatch");
  if (!is_symplectic(f)) throw std::invalid_argument("transport: matrix is not symplectic");
  if (const auto* s = std::get_if<Bscc>(&spec.value)) return make_bscc(map_pairs(f, s->pairs));
  if (const auto* s = std::get_if<BoundingPair>(&spec.value)) return make_bp(f * s->e, map_pairs(f, s->pairs));
  if (const auto* s = std::get_if<Twist>(&spec.value)) return make_twist(f * s->x, s->power);
  const auto& c = std::get<Conj>(spec.value);
  // f (h w h^{-1}) f^{-1} = (f h) w (f h)^{-1}
  return make_conj(f * c.by, *c.inner);
}

bool rohlin(const TorelliWord& w) { return pi0(sigma_word(w)); }

gf2::F2Vector mu_x(const TorelliWord& w, const gf2::F2Vector& x) {
  return rohlin(w) ? x : gf2::F2Vector(x.size());
}

std::vector<GeneratorSpec> find_rohlin_nontrivial(int g, std::size_t limit) {
  if (g < 1 || g > 3) throw std::out_of_range("find_rohlin_nontrivial: search is bounded to 1 <= g <= 3");
  const int n = 2 * g;
  std::vector<HClass> classes;
  HClass v = HClass::Constant(n, -1);
  // odometer over {-1, 0, 1}^{2g} in lexicographic order
  while (true) {
    classes.push_back(v);
    int i = n - 1;
    while (i >= 0 && v(i) == 1) v(i--) = -1;
    if (i < 0) break;
    ++v(i);
  }
  std::vector<GeneratorSpec> found;
  for (const auto& c : classes) {
    const BoolElement cbar = bar(c);
    for (const auto& d : classes) {
      if (omega(c, d) != 1) continue;
      if (!pi0(cbar * bar(d))) continue;
      found.push_back(make_bscc({{c, d}}));
      if (found.size() >= limit) return found;
    }
  }
  return found;
}

}  // namespace torelli
