#pragma once

// The Birman-Craggs-Johnson homomorphism on generator letters and words, its
// transport under the symplectic action, and the Rohlin invariant read off
// as the constant coefficient.

#include <cstddef>
#include <string>
#include <vector>

#include "torelli/boolean_algebra.hpp"
#include "torelli/gf2.hpp"
#include "torelli/words.hpp"

namespace torelli {

/// sigma of one Torelli letter:
///   BSCC:       sum_i cbar_i dbar_i
///   BP:         sum_i cbar_i dbar_i (ebar + 1)
///   conjugate:  Psi(f) acting on sigma(inner)
/// Throws std::invalid_argument on invalid letters and on plain twists.
BoolElement sigma_spec(const GeneratorSpec& spec);
/// GF(2) sum over the letters. An inverse letter has the same value.
BoolElement sigma_word(const TorelliWord& w);

/// f * letter * f^{-1} expressed on the homology data: every class is
/// replaced by its image under f. Throws std::invalid_argument when f is not
/// symplectic or the genus differs.
GeneratorSpec transport(const SpMatrix& f, const GeneratorSpec& spec);

/// Projection onto the degree-0 part, i.e. the coefficient of 1.
inline bool pi0(const BoolElement& p) { return constant_coefficient(p); }

/// Rohlin invariant of the homology sphere glued by w.
bool rohlin(const TorelliWord& w);

/// A finite elementary abelian 2-group (Z/2)^r with named basis elements.
class TwoTorsionGroup {
public:
  explicit TwoTorsionGroup(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  static TwoTorsionGroup cyclic() { return TwoTorsionGroup({"1"}); }

  [[nodiscard]] std::size_t rank() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] gf2::F2Vector zero() const { return gf2::F2Vector(rank()); }
  [[nodiscard]] gf2::F2Vector basis(std::size_t i) const { return gf2::F2Vector::unit(rank(), i); }
  [[nodiscard]] bool contains(const gf2::F2Vector& x) const { return x.size() == rank(); }

private:
  std::vector<std::string> labels_;
};

/// x when rohlin(w) = 1, zero otherwise.
gf2::F2Vector mu_x(const TorelliWord& w, const gf2::F2Vector& x);

/// Genus-1 BSCC letters with coordinates in {-1, 0, 1} and nonzero Rohlin
/// value, in lexicographic order of (c, d). Stops after `limit` hits.
std::vector<GeneratorSpec> find_rohlin_nontrivial(int g, std::size_t limit = 1);

}  // namespace torelli
