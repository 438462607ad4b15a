#include "torelli/coinvariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace torelli {

namespace {

gf2::F2Vector augmented(const gf2::F2Vector& head, std::size_t tail_length, std::optional<std::size_t> tail_bit) {
  gf2::F2Vector v(head.size() + tail_length);
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head.get(i)) v.set(i, true);
  }
  if (tail_bit) v.set(head.size() + *tail_bit, true);
  return v;
}

std::string generator_label(int g, int index) {
  return std::string(1, index < g ? 'a' : 'b') + std::to_string(index % g + 1);
}

}  // namespace

CoinvariantResult::CoinvariantResult(std::vector<std::string> labels, gf2::EchelonBasis relations,
                                     std::vector<std::size_t> representatives)
    : labels_(std::move(labels)),
      relations_(std::move(relations)),
      representatives_(std::move(representatives)),
      solver_(labels_.size() + representatives_.size()) {
  const std::size_t n = labels_.size();
  const std::size_t q = representatives_.size();
  const gf2::F2Matrix rel = relations_.matrix();
  for (const auto& row : rel.row_list()) solver_.insert(augmented(row, q, std::nullopt));
  for (std::size_t i = 0; i < q; ++i) solver_.insert(augmented(gf2::F2Vector::unit(n, representatives_[i]), q, i));
  if (solver_.rank() != n) throw std::logic_error("coinvariants: representatives do not complete the relation space");
}

std::vector<std::string> CoinvariantResult::representative_labels() const {
  std::vector<std::string> out;
  out.reserve(representatives_.size());
  for (std::size_t i : representatives_) out.push_back(labels_[i]);
  return out;
}

gf2::F2Vector CoinvariantResult::reduce(const gf2::F2Vector& v) const {
  const std::size_t n = labels_.size();
  if (v.size() != n) throw std::invalid_argument("quotient_class: dimension mismatch");
  const gf2::F2Vector r = solver_.reduce(augmented(v, quotient_dimension(), std::nullopt));
  gf2::F2Vector out(quotient_dimension());
  for (std::size_t i = 0; i < quotient_dimension(); ++i) out.set(i, r.get(n + i));
  return out;
}

CoinvariantResult coinvariants(const ActionPresentation& act) {
  const std::size_t n = act.dimension();
  gf2::EchelonBasis relations(n);
  for (std::size_t k = 0; k < act.generators.size(); ++k) {
    const gf2::F2Matrix& m = act.generators[k];
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("coinvariants: generator " + std::to_string(k) + " has the wrong dimension");
    if (gf2::rank(m) != n) throw std::invalid_argument("coinvariants: generator " + std::to_string(k) + " is singular");
    const gf2::F2Matrix columns = m.transpose();
    for (std::size_t j = 0; j < n; ++j) {
      gf2::F2Vector rel = columns.row(j);
      rel.flip(j);
      relations.insert(std::move(rel));
    }
  }
  gf2::EchelonBasis grown = relations;
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < n; ++j) {
    if (grown.insert(gf2::F2Vector::unit(n, j))) reps.push_back(j);
  }
  return CoinvariantResult(act.labels, std::move(relations), std::move(reps));
}

gf2::F2Vector quotient_class(const CoinvariantResult& result, const gf2::F2Vector& p) { return result.reduce(p); }

std::vector<SpMatrix> gl_transvections(int g) {
  std::vector<SpMatrix> out;
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      if (i == j) continue;
      const MatrixX<Integer> t = MatrixX<Integer>::Identity(g, g) + elementary<Integer>(g, i, j);
      out.push_back(gl_embed(t));
    }
  }
  return out;
}

ActionPresentation boolean_action(int g, const std::vector<Monomial>& basis, const std::vector<SpMatrix>& gens,
                                  bool graded) {
  std::unordered_map<Monomial, std::size_t> index;
  ActionPresentation act;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i], i);
    act.labels.push_back(monomial_to_string(basis[i], g));
  }
  const std::size_t n = basis.size();
  for (const SpMatrix& f : gens) {
    if (genus_of(f) != g) throw std::invalid_argument("boolean_action: generator genus mismatch");
    const Mod2Action action(reduce_mod2(f));
    gf2::F2Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const int d = monomial_degree(basis[j]);
      const BoolElement image = action.apply(basis[j]);
      for (Monomial t : image.terms()) {
        if (graded && monomial_degree(t) < d) continue;
        const auto it = index.find(t);
        if (it == index.end()) throw std::invalid_argument("boolean_action: basis is not closed under the action");
        m.set(it->second, j, true);
      }
    }
    act.generators.push_back(std::move(m));
  }
  return act;
}

ActionPresentation gl_action_on_boolean(int g, int max_degree) {
  if (g < 2 || g > 8) throw std::out_of_range("gl_action_on_boolean: genus must lie in [2, 8]");
  if (max_degree < 0 || max_degree > 2 * g) throw std::out_of_range("gl_action_on_boolean: degree out of range");
  return boolean_action(g, monomials_up_to_degree(g, max_degree), gl_transvections(g));
}

ActionPresentation gl_action_on_boolean_graded(int g, int degree) {
  if (g < 2 || g > 8) throw std::out_of_range("gl_action_on_boolean_graded: genus must lie in [2, 8]");
  if (degree < 0 || degree > 2 * g) throw std::out_of_range("gl_action_on_boolean_graded: degree out of range");
  return boolean_action(g, monomials_of_degree(g, degree), gl_transvections(g), true);
}

ActionPresentation gl_action_on_lambda3(int g) {
  if (g < 2) throw std::out_of_range("gl_action_on_lambda3: genus must be at least 2");
  const int n = 2 * g;
  std::vector<std::array<int, 3>> triples;
  std::unordered_map<int, std::size_t> index;
  auto key = [n](int i, int j, int k) { return (i * n + j) * n + k; };
  ActionPresentation act;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        index.emplace(key(i, j, k), triples.size());
        triples.push_back({i, j, k});
        act.labels.push_back(generator_label(g, i) + "^" + generator_label(g, j) + "^" + generator_label(g, k));
      }
    }
  }
  const std::size_t dim = triples.size();
  for (const SpMatrix& f : gl_transvections(g)) {
    const gf2::F2Matrix m2 = reduce_mod2(f);
    std::vector<std::vector<int>> support(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        if (m2.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) support[c].push_back(r);
      }
    }
    gf2::F2Matrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto& [i, j, k] = triples[col];
      // multilinear expansion; repeated factors vanish and signs are irrelevant mod 2
      for (int p : support[i]) {
        for (int q : support[j]) {
          for (int r : support[k]) {
            if (p == q || q == r || p == r) continue;
            int s[3] = {p, q, r};
            std::sort(s, s + 3);
            const std::size_t row = index.at(key(s[0], s[1], s[2]));
            m.set(row, col, !m.get(row, col));
          }
        }
      }
    }
    act.generators.push_back(std::move(m));
  }
  return act;
}

bool CoinvariantRow::matches() const {
  if (expected_dimension && *expected_dimension != dimension) return false;
  if (expected_representatives && *expected_representatives != representatives) return false;
  return true;
}

bool CoinvariantTable::ok() const {
  for (const auto& row : rows) {
    if (!row.matches()) return false;
  }
  return true;
}

CoinvariantTable verify_lemma_coinvariants(int g, int max_degree) {
  if (g < 3) throw std::out_of_range("verify_lemma_coinvariants: genus must be at least 3");
  if (max_degree < 0 || max_degree > 3) throw std::out_of_range("verify_lemma_coinvariants: degree must lie in [0, 3]");
  CoinvariantTable table;
  table.genus = g;
  for (int k = 0; k <= max_degree; ++k) {
    const CoinvariantResult r = coinvariants(gl_action_on_boolean(g, k));
    CoinvariantRow row;
    row.degree = k;
    row.dimension = r.quotient_dimension();
    row.representatives = r.representative_labels();
    if (k <= 1) {
      row.expected_dimension = 1;
      row.expected_representatives = std::vector<std::string>{"1"};
    } else if (k == 2) {
      row.expected_dimension = 2;
      row.expected_representatives = std::vector<std::string>{"1", "a1*b1"};
    } else if (g >= 4) {
      row.expected_dimension = 1;
      row.expected_representatives = std::vector<std::string>{"1"};
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace torelli
