#pragma once

// Words in the free group on alpha_1..alpha_g and automorphisms given by the
// images of the generators.

#include <string>
#include <vector>

namespace torelli {

struct FreeLetter {
  int generator = 1;  // 1-based
  int exponent = 1;   // +1 or -1
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Always freely reduced.
class FreeGroupWord {
public:
  explicit FreeGroupWord(int rank) : rank_(rank) {}
  /// Reduces the input. Throws std::invalid_argument for out-of-range
  /// generators or exponents other than +-1.
  FreeGroupWord(int rank, const std::vector<FreeLetter>& letters);
  static FreeGroupWord generator(int rank, int i, int exponent = 1);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<FreeLetter>& letters() const { return letters_; }
  [[nodiscard]] bool is_identity() const { return letters_.empty(); }
  [[nodiscard]] FreeGroupWord inverse() const;
  /// "a3*a2*a1*a2^-1*a3^-1", "1" for the identity.
  [[nodiscard]] std::string to_string() const;

  friend FreeGroupWord operator*(const FreeGroupWord& lhs, const FreeGroupWord& rhs);
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<FreeLetter> free_reduce(const std::vector<FreeLetter>& letters);

class FreeAutomorphism {
public:
  /// images[i] is the image of alpha_{i+1}.
  explicit FreeAutomorphism(std::vector<FreeGroupWord> images);
  static FreeAutomorphism identity(int rank);

  [[nodiscard]] int rank() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] const FreeGroupWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] FreeGroupWord apply(const FreeGroupWord& w) const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

private:
  std::vector<FreeGroupWord> images_;
};

/// (phi o psi)(alpha_i) = phi(psi(alpha_i)). Throws on rank mismatch.
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);
/// Both composites are the identity on every generator.
bool is_inverse(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

/// K_ij: alpha_i -> alpha_j alpha_i alpha_j^{-1}, other generators fixed.
FreeAutomorphism conjugation_automorphism(int rank, int i, int j);

}  // namespace torelli
