#pragma once

// Coinvariants M_G = M / span{g.m - m} of a finite-dimensional GF(2) module
// under a group given by generator matrices, and the GL_g(Z) modules they are
// applied to: the filtration pieces of the Boolean algebra and Lambda^3 H_2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torelli/boolean_algebra.hpp"
#include "torelli/gf2.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

/// Generator matrices act on column vectors: column j is the image of basis
/// vector j.
struct ActionPresentation {
  std::vector<std::string> labels;
  std::vector<gf2::F2Matrix> generators;

  [[nodiscard]] std::size_t dimension() const { return labels.size(); }
};

class CoinvariantResult {
public:
  CoinvariantResult(std::vector<std::string> labels, gf2::EchelonBasis relations,
                    std::vector<std::size_t> representatives);

  [[nodiscard]] std::size_t module_dimension() const { return labels_.size(); }
  [[nodiscard]] std::size_t quotient_dimension() const { return representatives_.size(); }
  /// Echelon basis of span{g.e_j - e_j}.
  [[nodiscard]] const gf2::EchelonBasis& relations() const { return relations_; }
  /// Basis indices whose classes form a basis of the quotient, chosen greedily
  /// in basis order.
  [[nodiscard]] const std::vector<std::size_t>& representatives() const { return representatives_; }
  [[nodiscard]] std::vector<std::string> representative_labels() const;
  /// Coordinates of the class of v with respect to the representatives.
  [[nodiscard]] gf2::F2Vector reduce(const gf2::F2Vector& v) const;

private:
  std::vector<std::string> labels_;
  gf2::EchelonBasis relations_;
  std::vector<std::size_t> representatives_;
  gf2::EchelonBasis solver_;  // rows [relation | 0] and [e_rep | e_i]
};

/// Throws std::invalid_argument when a generator has the wrong shape or is
/// singular.
CoinvariantResult coinvariants(const ActionPresentation& act);

/// Free function form of CoinvariantResult::reduce.
gf2::F2Vector quotient_class(const CoinvariantResult& result, const gf2::F2Vector& p);

/// gl_embed(Id + E_ij) for all i != j. Their reductions generate GL_g(F_2).
std::vector<SpMatrix> gl_transvections(int g);

/// Action of the given symplectic matrices on a span of monomials. With
/// `graded` set, terms of lower degree than the source monomial are dropped,
/// which realises the quotient B_k / B_{k-1} when `basis` is one degree.
/// Throws if the basis is not closed under the action.
ActionPresentation boolean_action(int g, const std::vector<Monomial>& basis, const std::vector<SpMatrix>& gens,
                                  bool graded = false);

/// Monomials of degree <= max_degree under the GL transvections.
/// Requires 2 <= g <= 8 and 0 <= max_degree <= 2g.
ActionPresentation gl_action_on_boolean(int g, int max_degree);
/// Degree-k monomials modulo lower degree, i.e. B_k / B_{k-1}.
ActionPresentation gl_action_on_boolean_graded(int g, int degree);
/// Third exterior power of H_1(Sigma; Z/2) with basis e_i ^ e_j ^ e_k, i < j < k.
ActionPresentation gl_action_on_lambda3(int g);

struct CoinvariantRow {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<std::string> representatives;
  std::optional<std::size_t> expected_dimension;
  std::optional<std::vector<std::string>> expected_representatives;

  [[nodiscard]] bool asserted() const { return expected_dimension.has_value(); }
  [[nodiscard]] bool matches() const;
};

struct CoinvariantTable {
  int genus = 0;
  std::vector<CoinvariantRow> rows;
  [[nodiscard]] bool ok() const;
};

/// dim (B_k)_GL for k = 0..3 with representatives. Known values are attached
/// as expectations: (1, 1, 2) for g >= 3 and 1 in degree 3 for g >= 4.
/// Requires g >= 3.
CoinvariantTable verify_lemma_coinvariants(int g, int max_degree = 3);

}  // namespace torelli
