#pragma once

// Seeded random generation of symplectic matrices, letters and words for the
// property suites.

#include <random>

#include "torelli/words.hpp"

namespace torelli {

using Rng = std::mt19937_64;

/// Product of 1..max_factors factors, each an embedded GL transvection
/// gl_embed(Id +- E_ij) or a symplectic transvection T_x^{+-1} with x a
/// random nonzero {-1,0,1} class. Genus 1 uses transvections only.
SpMatrix random_symplectic(int g, Rng& rng, int max_factors = 10);

/// A valid Torelli letter: a standard BSCC or BP transported by a random
/// symplectic matrix, sometimes wrapped in a conjugation.
GeneratorSpec random_torelli_letter(int g, Rng& rng);

TorelliWord random_torelli_word(int g, Rng& rng, int max_length = 5);

}  // namespace torelli
