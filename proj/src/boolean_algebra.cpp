#include "torelli/boolean_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace torelli {

namespace {

void check_genus(int g) {
  if (g < 1 || g > kMaxGenus) throw std::invalid_argument("genus out of range for the Boolean algebra");
}

void require_same_genus(const BoolElement& p, const BoolElement& q) {
  if (p.genus() != q.genus()) throw std::invalid_argument("Boolean algebra: genus mismatch");
}

// sorts and cancels pairs
std::vector<Monomial> normalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), monomial_less);
  std::vector<Monomial> out;
  out.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ms[i]);
    i = j;
  }
  return out;
}

void combinations(int n, int d, int start, Monomial acc, std::vector<Monomial>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - d; ++i) combinations(n, d - 1, i + 1, acc | (Monomial{1} << i), out);
}

}  // namespace

int monomial_degree(Monomial m) { return std::popcount(m); }

bool monomial_less(Monomial lhs, Monomial rhs) {
  const int dl = std::popcount(lhs), dr = std::popcount(rhs);
  if (dl != dr) return dl < dr;
  if (lhs == rhs) return false;
  // the lowest differing generator decides the lexicographic comparison
  const Monomial diff = lhs ^ rhs;
  const Monomial lowest = diff & (~diff + 1);
  return (lhs & lowest) != 0;
}

std::string monomial_to_string(Monomial m, int genus) {
  if (m == 0) return "1";
  std::string out;
  for (int i = 0; i < 2 * genus; ++i) {
    if (!(m >> i & 1u)) continue;
    if (!out.empty()) out += '*';
    out += (i < genus ? 'a' : 'b');
    out += std::to_string(i % genus + 1);
  }
  return out;
}

Monomial parse_monomial(const std::string& text, int genus) {
  if (text == "1") return 0;
  Monomial m = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(pos, end - pos);
    if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b'))
      throw std::invalid_argument("bad generator '" + token + "'");
    int handle = 0;
    try {
      std::size_t used = 0;
      handle = std::stoi(token.substr(1), &used);
      if (used != token.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator '" + token + "'");
    }
    if (handle < 1 || handle > genus) throw std::invalid_argument("generator '" + token + "' outside genus");
    m |= Monomial{1} << ((token[0] == 'a' ? 0 : genus) + handle - 1);
    pos = end + 1;
  }
  return m;
}

BoolElement::BoolElement(int genus) : genus_(genus) { check_genus(genus); }

BoolElement::BoolElement(int genus, std::vector<Monomial> monomials) : genus_(genus) {
  check_genus(genus);
  const Monomial allowed = genus == 16 ? ~Monomial{0} : (Monomial{1} << (2 * genus)) - 1;
  for (Monomial m : monomials) {
    if ((m & ~allowed) != 0) throw std::invalid_argument("monomial outside the generator range");
  }
  terms_ = normalize(std::move(monomials));
}

BoolElement BoolElement::generator(int genus, int index) {
  if (index < 0 || index >= 2 * genus) throw std::out_of_range("generator index out of range");
  return BoolElement(genus, {Monomial{1} << index});
}

bool BoolElement::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, monomial_less);
}

int BoolElement::degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.back()); }

BoolElement& BoolElement::operator+=(const BoolElement& other) {
  require_same_genus(*this, other);
  std::vector<Monomial> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(out), monomial_less);
  terms_ = std::move(out);
  return *this;
}

BoolElement operator*(const BoolElement& lhs, const BoolElement& rhs) {
  require_same_genus(lhs, rhs);
  std::vector<Monomial> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (Monomial x : lhs.terms_) {
    for (Monomial y : rhs.terms_) products.push_back(x | y);
  }
  BoolElement out(lhs.genus_);
  out.terms_ = normalize(std::move(products));
  return out;
}

std::string BoolElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (Monomial m : terms_) {
    if (!out.empty()) out += " + ";
    out += monomial_to_string(m, genus_);
  }
  return out;
}

BoolElement multiply(const BoolElement& p, const BoolElement& q) { return p * q; }

BoolElement bar(const gf2::F2Vector& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("bar: class of odd length");
  const int g = static_cast<int>(x.size() / 2);
  std::vector<Monomial> terms;
  bool constant = false;
  for (int i = 0; i < 2 * g; ++i) {
    if (x.get(static_cast<std::size_t>(i))) terms.push_back(Monomial{1} << i);
  }
  // omega(e_s, e_t) is odd exactly for the pairs {a_i, b_i}
  for (int i = 0; i < g; ++i) {
    if (x.get(static_cast<std::size_t>(i)) && x.get(static_cast<std::size_t>(g + i))) constant = !constant;
  }
  if (constant) terms.push_back(0);
  return BoolElement(g, std::move(terms));
}

BoolElement bar(const HClass& x) { return bar(reduce_mod2(x)); }

Mod2Action::Mod2Action(const gf2::F2Matrix& m2) : genus_(static_cast<int>(m2.rows() / 2)) {
  if (m2.rows() != m2.cols() || m2.rows() % 2 != 0) throw std::invalid_argument("Mod2Action: bad matrix shape");
  images_.reserve(m2.cols());
  for (std::size_t s = 0; s < m2.cols(); ++s) images_.push_back(bar(m2.column(s)));
}

BoolElement Mod2Action::apply(Monomial m) const {
  BoolElement out = BoolElement::one(genus_);
  for (int s = 0; s < 2 * genus_; ++s) {
    if (m >> s & 1u) out = out * images_[static_cast<std::size_t>(s)];
  }
  return out;
}

BoolElement Mod2Action::apply(const BoolElement& p) const {
  if (p.genus() != genus_) throw std::invalid_argument("sp_action: genus mismatch");
  BoolElement out(genus_);
  for (Monomial m : p.terms()) out += apply(m);
  return out;
}

BoolElement sp_action(const SpMatrix& m, const BoolElement& p) {
  if (genus_of(m) != p.genus()) throw std::invalid_argument("sp_action: genus mismatch");
  if (!is_symplectic(m)) throw std::invalid_argument("sp_action: matrix is not symplectic");
  return Mod2Action(reduce_mod2(m)).apply(p);
}

Monomial stabilize_monomial(Monomial m, int from_genus, int to_genus) {
  const Monomial low = (Monomial{1} << from_genus) - 1;
  return (m & low) | ((m >> from_genus) << to_genus);
}

BoolElement stabilize(const BoolElement& p, int to_genus) {
  if (to_genus < p.genus()) throw std::invalid_argument("stabilize: target genus smaller than source");
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size());
  for (Monomial m : p.terms()) terms.push_back(stabilize_monomial(m, p.genus(), to_genus));
  return BoolElement(to_genus, std::move(terms));
}

std::vector<Monomial> monomials_of_degree(int genus, int d) {
  check_genus(genus);
  std::vector<Monomial> out;
  if (d < 0 || d > 2 * genus) return out;
  combinations(2 * genus, d, 0, 0, out);
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int genus, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= std::min(d, 2 * genus); ++k) {
    auto part = monomials_of_degree(genus, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace torelli
