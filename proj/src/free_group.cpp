#include "torelli/free_group.hpp"

#include <stdexcept>

namespace torelli {

std::vector<FreeLetter> free_reduce(const std::vector<FreeLetter>& letters) {
  std::vector<FreeLetter> out;
  out.reserve(letters.size());
  for (const FreeLetter& l : letters) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeGroupWord::FreeGroupWord(int rank, const std::vector<FreeLetter>& letters) : rank_(rank) {
  for (const FreeLetter& l : letters) {
    if (l.generator < 1 || l.generator > rank) throw std::invalid_argument("free group letter out of range");
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("free group exponent must be +1 or -1");
  }
  letters_ = free_reduce(letters);
}

FreeGroupWord FreeGroupWord::generator(int rank, int i, int exponent) { return FreeGroupWord(rank, {{i, exponent}}); }

FreeGroupWord FreeGroupWord::inverse() const {
  std::vector<FreeLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return FreeGroupWord(rank_, out);
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const FreeLetter& l : letters_) {
    if (!out.empty()) out += '*';
    out += "a" + std::to_string(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

FreeGroupWord operator*(const FreeGroupWord& lhs, const FreeGroupWord& rhs) {
  if (lhs.rank_ != rhs.rank_) throw std::invalid_argument("free group words of different rank");
  std::vector<FreeLetter> all = lhs.letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return FreeGroupWord(lhs.rank_, all);
}

FreeAutomorphism::FreeAutomorphism(std::vector<FreeGroupWord> images) : images_(std::move(images)) {
  for (const auto& w : images_) {
    if (w.rank() != rank()) throw std::invalid_argument("automorphism image has the wrong rank");
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<FreeGroupWord> images;
  for (int i = 1; i <= rank; ++i) images.push_back(FreeGroupWord::generator(rank, i));
  return FreeAutomorphism(std::move(images));
}

FreeGroupWord FreeAutomorphism::apply(const FreeGroupWord& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("automorphism applied to a word of different rank");
  FreeGroupWord out(rank());
  for (const FreeLetter& l : w.letters()) {
    const FreeGroupWord& img = image(l.generator);
    out = out * (l.exponent > 0 ? img : img.inverse());
  }
  return out;
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  if (phi.rank() != psi.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<FreeGroupWord> images;
  for (int i = 1; i <= psi.rank(); ++i) images.push_back(phi.apply(psi.image(i)));
  return FreeAutomorphism(std::move(images));
}

bool is_inverse(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  if (phi.rank() != psi.rank()) return false;
  const FreeAutomorphism id = FreeAutomorphism::identity(phi.rank());
  return compose(phi, psi) == id && compose(psi, phi) == id;
}

FreeAutomorphism conjugation_automorphism(int rank, int i, int j) {
  if (i < 1 || i > rank || j < 1 || j > rank || i == j) throw std::invalid_argument("K_ij: bad indices");
  std::vector<FreeGroupWord> images;
  for (int k = 1; k <= rank; ++k) images.push_back(FreeGroupWord::generator(rank, k));
  images[static_cast<std::size_t>(i - 1)] = FreeGroupWord(rank, {{j, 1}, {i, 1}, {j, -1}});
  return FreeAutomorphism(std::move(images));
}

}  // namespace torelli
