#include "torelli/symplectic.hpp"

#include <cstdlib>

namespace torelli {

SpMatrix handle_swap(int g, int i, int j) {
  GLMatrix p = GLMatrix::Identity(g, g);
  p.row(i - 1).swap(p.row(j - 1));
  return gl_embed(p);
}

gf2::F2Matrix reduce_mod2(const SpMatrix& m) {
  gf2::F2Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) % 2 != 0) out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
    }
  }
  return out;
}

gf2::F2Vector reduce_mod2(const HClass& x) {
  gf2::F2Vector v(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) % 2 != 0) v.set(static_cast<std::size_t>(i), true);
  }
  return v;
}

std::string to_string(const HClass& x) {
  const int g = genus_of(x);
  std::string out;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Integer c = x(i);
    if (c == 0) continue;
    const std::string name = (i < g ? "a" : "b") + std::to_string(i % g + 1);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (std::llabs(c) != 1) out += std::to_string(std::llabs(c)) + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace torelli
