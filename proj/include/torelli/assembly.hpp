#pragma once

// Sampled-witness harness for 2-cocycles on the Torelli group with values in
// an elementary abelian 2-group (Z/2)^r: coboundaries, the three cocycle
// conditions, trivializations, the torsor cochain, and assembly of candidate
// invariants q + mu^x. Every group-level statement is checked on the samples
// only.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torelli/bcj.hpp"
#include "torelli/gf2.hpp"
#include "torelli/report.hpp"
#include "torelli/words.hpp"

namespace torelli {

using Coefficient = gf2::F2Vector;
using WordEvaluator = std::function<Coefficient(const TorelliWord&)>;
using CocycleEvaluator = std::function<Coefficient(const TorelliWord&, const TorelliWord&)>;

struct CocycleOracle {
  std::size_t rank = 1;
  CocycleEvaluator evaluate;
  Coefficient operator()(const TorelliWord& phi, const TorelliWord& psi) const { return evaluate(phi, psi); }
};

struct TrivializationOracle {
  std::size_t rank = 1;
  WordEvaluator evaluate;
  Coefficient operator()(const TorelliWord& w) const { return evaluate(w); }
};

struct SampleSet {
  int genus = 4;
  std::vector<TorelliWord> words;
  /// Symplectic images of elements of AB (block-diagonal GL embeddings).
  std::vector<SpMatrix> conjugators;
  /// Standard-position CBP words in TB and their mirrors in TA.
  std::vector<TorelliWord> tb;
  std::vector<TorelliWord> ta;
  int stabilize_to = 5;
};

/// Deterministic samples: random words, a Rohlin-nontrivial word, standard
/// TB/TA generators and their AB-conjugates, GL transvections and a handle
/// swap as conjugators. Requires g >= 2.
SampleSet standard_samples(int g, std::uint64_t seed = 1, int random_words = 12);

TrivializationOracle zero_trivialization(std::size_t rank);
CocycleOracle zero_cocycle(std::size_t rank);
/// w -> mu^x(w).
TrivializationOracle mu_trivialization(const Coefficient& x);

/// (phi, psi) -> F(phi) + F(psi) - F(phi psi).
CocycleOracle coboundary(const TrivializationOracle& f);

/// C(psi, eta) - C(phi psi, eta) + C(phi, psi eta) - C(phi, psi) = 0 on
/// sampled triples.
CheckReport check_cocycle_identity(const CocycleOracle& c, const SampleSet& samples, std::size_t max_triples = 200);

/// (1) stabilization, (2) AB-conjugation invariance, (3) vanishing when the
/// left argument is in TA or the right one in TB.
CheckReport check_conditions(const CocycleOracle& c, const SampleSet& samples);

/// q(phi) + q(psi) - q(phi psi) = C(phi, psi) on sampled pairs.
CheckReport check_trivialization(const TrivializationOracle& q, const CocycleOracle& c, const SampleSet& samples);

/// w -> q(f w f^{-1}) - q(w).
WordEvaluator torsor_cochain(const TrivializationOracle& q, const SpMatrix& f);
/// The torsor cochain vanishes for every sampled conjugator and word.
CheckReport check_torsor_trivial(const TrivializationOracle& q, const SampleSet& samples);

struct AssembledInvariant {
  WordEvaluator evaluate;
  CheckReport report;
};

/// Candidate invariant w -> q(w) + mu^x(w). The report covers vanishing on
/// the TB/TA samples, stabilization, and xi_a w xi_b = w on the samples.
/// Throws std::invalid_argument when q is not a trivialization of c on the
/// samples.
AssembledInvariant assemble(const TrivializationOracle& q, const CocycleOracle& c, const Coefficient& x,
                            const SampleSet& samples);

}  // namespace torelli
