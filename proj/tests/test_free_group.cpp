#include <doctest.h>

#include <random>
#include <stdexcept>

#include "torelli/free_group.hpp"

using namespace torelli;

namespace {

FreeGroupWord gen(int rank, int i, int e = 1) { return FreeGroupWord::generator(rank, i, e); }

// Cancels a randomly chosen adjacent inverse pair until none is left.
std::vector<FreeLetter> reduce_randomly(std::vector<FreeLetter> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].generator == w[i + 1].generator && w[i].exponent == -w[i + 1].exponent) spots.push_back(i);
    }
    if (spots.empty()) return w;
    const std::size_t i = spots[rng() % spots.size()];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

}  // namespace

TEST_CASE("words are freely reduced") {
  const FreeGroupWord w(3, {{1, 1}, {2, 1}, {2, -1}, {1, -1}, {3, 1}});
  CHECK(w == gen(3, 3));
  CHECK(FreeGroupWord(2, {{1, 1}, {1, -1}}).is_identity());
  CHECK(FreeGroupWord(2).to_string() == "1");
  CHECK((gen(3, 3) * gen(3, 2) * gen(3, 1) * gen(3, 2, -1) * gen(3, 3, -1)).to_string() == "a3*a2*a1*a2^-1*a3^-1");
  CHECK((gen(2, 1) * gen(2, 1).inverse()).is_identity());
  CHECK_THROWS_AS(FreeGroupWord(2, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FreeGroupWord(2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(gen(2, 0), std::invalid_argument);
}

TEST_CASE("free reduction is confluent") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    std::vector<FreeLetter> w;
    const int n = static_cast<int>(rng() % 16);
    for (int i = 0; i < n; ++i) w.push_back({1 + static_cast<int>(rng() % 2), (rng() & 1u) ? 1 : -1});
    const auto normal = free_reduce(w);
    CHECK(reduce_randomly(w, rng) == normal);
    CHECK(reduce_randomly(w, rng) == normal);
    for (std::size_t i = 0; i + 1 < normal.size(); ++i) {
      CHECK_FALSE((normal[i].generator == normal[i + 1].generator && normal[i].exponent == -normal[i + 1].exponent));
    }
  }
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(5);
  const auto random_word = [&](int rank) {
    std::vector<FreeLetter> w;
    for (int i = 0, n = static_cast<int>(rng() % 8); i < n; ++i)
      w.push_back({1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rank)), (rng() & 1u) ? 1 : -1});
    return FreeGroupWord(rank, w);
  };
  for (int t = 0; t < 200; ++t) {
    const FreeGroupWord x = random_word(3), y = random_word(3), z = random_word(3);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * x.inverse()).is_identity());
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
  }
}

TEST_CASE("composition") {
  const FreeAutomorphism k12 = conjugation_automorphism(3, 1, 2);
  CHECK(k12.image(1) == gen(3, 2) * gen(3, 1) * gen(3, 2, -1));
  CHECK(k12.image(2) == gen(3, 2));
  CHECK(compose(FreeAutomorphism::identity(3), k12) == k12);
  CHECK(compose(k12, FreeAutomorphism::identity(3)) == k12);

  const FreeAutomorphism twice = compose(k12, k12);
  CHECK(twice.image(1) == gen(3, 2) * gen(3, 2) * gen(3, 1) * gen(3, 2, -1) * gen(3, 2, -1));
  CHECK(twice.image(3) == gen(3, 3));

  const FreeAutomorphism k12_inverse({gen(3, 2, -1) * gen(3, 1) * gen(3, 2), gen(3, 2), gen(3, 3)});
  CHECK(is_inverse(k12, k12_inverse));
  CHECK_FALSE(is_inverse(k12, k12));
  CHECK_THROWS(compose(k12, FreeAutomorphism::identity(4)));
  CHECK_THROWS(conjugation_automorphism(3, 1, 1));

  // automorphisms act as homomorphisms
  const FreeGroupWord w = gen(3, 1) * gen(3, 3, -1) * gen(3, 2);
  CHECK(k12.apply(w) == k12.apply(gen(3, 1)) * k12.apply(gen(3, 3, -1)) * k12.apply(gen(3, 2)));
  CHECK(compose(k12, twice).apply(w) == k12.apply(twice.apply(w)));
}
