#pragma once

// Homology-level descriptions of Torelli generators and words in them.
//
// A letter carries only the data the symplectic representation and the BCJ
// homomorphism depend on: homology classes of the relevant curves and a
// symplectic basis of the relevant subsurface.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torelli/symplectic.hpp"

namespace torelli {

/// Size-checked exact equality (Eigen's operator== asserts on size mismatch).
template <typename Scalar>
bool same(const MatrixX<Scalar>& x, const MatrixX<Scalar>& y) {
  return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
}
template <typename Scalar>
bool same(const VectorX<Scalar>& x, const VectorX<Scalar>& y) {
  return x.size() == y.size() && x == y;
}

struct SymplecticPair {
  HClass c;
  HClass d;
  friend bool operator==(const SymplecticPair& lhs, const SymplecticPair& rhs) {
    return same(lhs.c, rhs.c) && same(lhs.d, rhs.d);
  }
};

using SymplecticPairList = std::vector<SymplecticPair>;

struct GeneratorSpec;

/// Twist about a bounding simple closed curve whose genus-k side has the
/// given symplectic basis.
struct Bscc {
  SymplecticPairList pairs;
  friend bool operator==(const Bscc&, const Bscc&) = default;
};

/// Bounding pair map T_beta T_beta'^{-1} with [beta] = e; `pairs` is a
/// symplectic basis of the genus-k subsurface between the two curves.
struct BoundingPair {
  HClass e;
  SymplecticPairList pairs;
  friend bool operator==(const BoundingPair& lhs, const BoundingPair& rhs) {
    return same(lhs.e, rhs.e) && lhs.pairs == rhs.pairs;
  }
};

/// Plain Dehn twist power T_x^k. Not Torelli unless k = 0 or x = 0.
struct Twist {
  HClass x;
  Integer power = 1;
  friend bool operator==(const Twist& lhs, const Twist& rhs) {
    return lhs.power == rhs.power && same(lhs.x, rhs.x);
  }
};

/// f * inner * f^{-1}, with f given by its symplectic matrix.
struct Conj {
  SpMatrix by;
  std::shared_ptr<const GeneratorSpec> inner;
  friend bool operator==(const Conj& lhs, const Conj& rhs);
};

struct GeneratorSpec {
  std::variant<Bscc, BoundingPair, Twist, Conj> value;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

GeneratorSpec make_bscc(SymplecticPairList pairs);
GeneratorSpec make_bp(HClass e, SymplecticPairList pairs);
GeneratorSpec make_twist(HClass x, Integer power);
GeneratorSpec make_conj(SpMatrix by, GeneratorSpec inner);

/// Genus the letter lives in; throws if it carries no classes at all.
int genus_of(const GeneratorSpec& spec);
/// BSCC, BP, or a conjugate of one.
bool is_torelli_letter(const GeneratorSpec& spec);

struct TorelliWord {
  int genus = 1;
  std::vector<GeneratorSpec> letters;
  friend bool operator==(const TorelliWord&, const TorelliWord&) = default;
};

bool is_torelli_word(const TorelliWord& w);
/// Product w1 * w2.
TorelliWord concatenate(const TorelliWord& lhs, const TorelliWord& rhs);
/// f * w * f^{-1}, letter by letter.
TorelliWord conjugate_word(const SpMatrix& f, const TorelliWord& w);

struct ValidationReport {
  std::string violation;  // empty when valid
  [[nodiscard]] bool ok() const { return violation.empty(); }
};

ValidationReport validate(const GeneratorSpec& spec);
/// Also checks that every letter has the word's genus. The message names the
/// offending letter index.
ValidationReport validate(const TorelliWord& w);

/// Symplectic image of one letter. Throws std::invalid_argument when invalid.
SpMatrix psi_of_spec(const GeneratorSpec& spec);
/// Product of the letter images, left to right.
SpMatrix psi_of_word(const TorelliWord& w);

/// BSCC with basis {(a_i, b_i)}_{i <= k}.
GeneratorSpec standard_bscc(int g, int k);
/// BP whose curves run around handle k+1, so [beta] = b_{k+1}, bounding the
/// subsurface with basis {(a_i, b_i)}_{i <= k}.
GeneratorSpec standard_bp(int g, int k);
/// Same configuration reflected through the Heegaard surface: a and b swap
/// roles, so [beta] = a_{k+1} and the basis is {(b_i, a_i)}.
GeneratorSpec standard_bp_mirror(int g, int k);

/// Splits a standard-position genus-k BP into k genus-1 BPs whose curves are
/// all homologous to beta, the i-th one cutting off handle i. Throws
/// std::invalid_argument for anything not produced by standard_bp.
std::vector<GeneratorSpec> decompose_bp(const GeneratorSpec& spec);

GeneratorSpec stabilize_spec(const GeneratorSpec& spec, int to_genus);
TorelliWord stabilize_word(const TorelliWord& w, int to_genus);

std::string describe(const GeneratorSpec& spec);

}  // namespace torelli
