#include "torelli/sampling.hpp"

#include <stdexcept>

#include "torelli/bcj.hpp"

namespace torelli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

HClass random_class(int g, Rng& rng) {
  HClass x = HClass::Zero(2 * g);
  while (x.isZero()) {
    for (int i = 0; i < 2 * g; ++i) x(i) = uniform(rng, -1, 1);
  }
  return x;
}

}  // namespace

SpMatrix random_symplectic(int g, Rng& rng, int max_factors) {
  if (g < 1) throw std::invalid_argument("random_symplectic: genus must be positive");
  SpMatrix f = SpMatrix::Identity(2 * g, 2 * g);
  const int n = uniform(rng, 1, max_factors);
  for (int k = 0; k < n; ++k) {
    const Integer sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    if (g >= 2 && uniform(rng, 0, 1) == 0) {
      const int i = uniform(rng, 1, g);
      int j = uniform(rng, 1, g - 1);
      if (j >= i) ++j;
      const MatrixX<Integer> t = MatrixX<Integer>::Identity(g, g) + sign * elementary<Integer>(g, i, j);
      f = f * gl_embed(t);
    } else {
      f = f * transvection_power(random_class(g, rng), sign);
    }
  }
  return f;
}

GeneratorSpec random_torelli_letter(int g, Rng& rng) {
  GeneratorSpec base = (g >= 2 && uniform(rng, 0, 1) == 0) ? standard_bp(g, uniform(rng, 1, g - 1))
                                                           : standard_bscc(g, uniform(rng, 1, g));
  GeneratorSpec moved = transport(random_symplectic(g, rng, 4), base);
  if (uniform(rng, 0, 3) == 0) return make_conj(random_symplectic(g, rng, 4), moved);
  return moved;
}

TorelliWord random_torelli_word(int g, Rng& rng, int max_length) {
  TorelliWord w{g, {}};
  const int n = uniform(rng, 0, max_length);
  for (int i = 0; i < n; ++i) w.letters.push_back(random_torelli_letter(g, rng));
  return w;
}

}  // namespace torelli
