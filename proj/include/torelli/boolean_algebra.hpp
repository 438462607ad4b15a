#pragma once

// The Boolean polynomial algebra on the mod-2 homology of Sigma_{g,1}.
//
// One generator xbar per class x, subject to
//   bar(x + y) = bar(x) + bar(y) + omega(x, y)   (mod 2)
//   bar(x)^2   = bar(x)
// so every element is a GF(2) sum of square-free monomials in the basis
// generators abar_1..abar_g, bbar_1..bbar_g. A monomial is stored as a bitmask
// over the 2g generators (bit i <-> the i-th basis class), which caps the
// genus at 16.

#include <cstdint>
#include <string>
#include <vector>

#include "torelli/gf2.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

using Monomial = std::uint32_t;

inline constexpr int kMaxGenus = 16;

int monomial_degree(Monomial m);
/// Total order used for storage and rendering: by degree, then
/// lexicographically on the ascending generator index list.
bool monomial_less(Monomial lhs, Monomial rhs);
/// "1", "a1*b1", "a1*a2*b3".
std::string monomial_to_string(Monomial m, int genus);
/// Inverse of monomial_to_string; throws std::invalid_argument.
Monomial parse_monomial(const std::string& text, int genus);

class BoolElement {
public:
  explicit BoolElement(int genus);
  /// Sum of the given monomials with GF(2) cancellation.
  BoolElement(int genus, std::vector<Monomial> monomials);

  static BoolElement zero(int genus) { return BoolElement(genus); }
  static BoolElement one(int genus) { return BoolElement(genus, {Monomial{0}}); }
  /// A single generator: index in [0, 2g).
  static BoolElement generator(int genus, int index);

  [[nodiscard]] int genus() const { return genus_; }
  [[nodiscard]] const std::vector<Monomial>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool contains(Monomial m) const;
  /// Largest monomial degree; -1 for the zero element.
  [[nodiscard]] int degree() const;

  BoolElement& operator+=(const BoolElement& other);
  friend BoolElement operator+(BoolElement lhs, const BoolElement& rhs) { return lhs += rhs; }
  friend BoolElement operator*(const BoolElement& lhs, const BoolElement& rhs);
  friend bool operator==(const BoolElement&, const BoolElement&) = default;

  /// Sorted monomial rendering, "0" for the zero element.
  [[nodiscard]] std::string to_string() const;

private:
  int genus_;
  std::vector<Monomial> terms_;  // sorted by monomial_less, no duplicates
};

BoolElement multiply(const BoolElement& p, const BoolElement& q);
inline int degree(const BoolElement& p) { return p.degree(); }

/// bar of a mod-2 class: the canonical expansion over its support,
/// sum_i ebar_{s_i} + sum_{i<j} omega(e_{s_i}, e_{s_j}) * 1.
BoolElement bar(const gf2::F2Vector& x);
BoolElement bar(const HClass& x);

/// Action of a symplectic matrix: each generator in each monomial is replaced
/// by bar of its image and the result multiplied out. Throws
/// std::invalid_argument when the matrix is not symplectic.
BoolElement sp_action(const SpMatrix& m, const BoolElement& p);

// Same action given only the mod-2 reduction of a symplectic matrix. No
// validation is done; the caller guarantees that `m2` comes from Sp_2g(Z).
class Mod2Action {
public:
  explicit Mod2Action(const gf2::F2Matrix& m2);
  [[nodiscard]] BoolElement apply(const BoolElement& p) const;
  [[nodiscard]] BoolElement apply(Monomial m) const;

private:
  int genus_;
  std::vector<BoolElement> images_;  // bar(M e_s) for each basis index s
};

/// Inclusion of the algebra at genus g into genus to_genus.
BoolElement stabilize(const BoolElement& p, int to_genus);
Monomial stabilize_monomial(Monomial m, int from_genus, int to_genus);

/// Coefficient of the monomial 1.
inline bool constant_coefficient(const BoolElement& p) { return p.contains(Monomial{0}); }

/// All monomials of degree exactly d (d <= 2g), in monomial_less order.
std::vector<Monomial> monomials_of_degree(int genus, int d);
/// All monomials of degree <= d, in monomial_less order.
std::vector<Monomial> monomials_up_to_degree(int genus, int d);

}  // namespace torelli
