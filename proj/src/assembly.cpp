#include "torelli/assembly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "torelli/coinvariants.hpp"
#include "torelli/sampling.hpp"

namespace torelli {

namespace {

std::string pair_name(const std::string& kind, std::size_t i, std::size_t j) {
  return kind + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_rank(const Coefficient& v, std::size_t rank, const char* what) {
  if (v.size() != rank) throw std::invalid_argument(std::string(what) + ": coefficient has the wrong rank");
}

TorelliWord single(int g, GeneratorSpec s) { return TorelliWord{g, {std::move(s)}}; }

}  // namespace

SampleSet standard_samples(int g, std::uint64_t seed, int random_words) {
  if (g < 2) throw std::invalid_argument("standard_samples: genus must be at least 2");
  SampleSet s;
  s.genus = g;
  s.stabilize_to = g + 1;
  Rng rng(seed);
  s.words.push_back(TorelliWord{g, {}});
  s.words.push_back(single(g, standard_bscc(g, 1)));
  // mixed-class genus-1 BSCC with nonzero constant term
  HClass c = HClass::Zero(2 * g), d = HClass::Zero(2 * g);
  c(0) = 1, c(1) = 1, c(g) = 1;
  d(0) = -1, d(g) = -1, d(g + 1) = -1;
  s.words.push_back(single(g, make_bscc({{c, d}})));
  for (int i = 0; i < random_words; ++i) s.words.push_back(random_torelli_word(g, rng, 3));

  s.conjugators = gl_transvections(g);
  s.conjugators.push_back(handle_swap(g, 1, 2));

  for (int k = 1; k <= g - 1; ++k) {
    s.tb.push_back(single(g, standard_bp(g, k)));
    s.ta.push_back(single(g, standard_bp_mirror(g, k)));
  }
  const SpMatrix f = gl_embed<Integer>(MatrixX<Integer>::Identity(g, g) + elementary<Integer>(g, 2, 1));
  s.tb.push_back(single(g, transport(f, standard_bp(g, 1))));
  s.ta.push_back(single(g, transport(f, standard_bp_mirror(g, 1))));
  return s;
}

TrivializationOracle zero_trivialization(std::size_t rank) {
  return {rank, [rank](const TorelliWord&) { return Coefficient(rank); }};
}

CocycleOracle zero_cocycle(std::size_t rank) {
  return {rank, [rank](const TorelliWord&, const TorelliWord&) { return Coefficient(rank); }};
}

TrivializationOracle mu_trivialization(const Coefficient& x) {
  return {x.size(), [x](const TorelliWord& w) { return mu_x(w, x); }};
}

CocycleOracle coboundary(const TrivializationOracle& f) {
  return {f.rank, [f](const TorelliWord& phi, const TorelliWord& psi) {
            return f(phi) + f(psi) + f(concatenate(phi, psi));
          }};
}

CheckReport check_cocycle_identity(const CocycleOracle& c, const SampleSet& samples, std::size_t max_triples) {
  CheckReport report{"cocycle-identity", {}};
  const auto& w = samples.words;
  const std::size_t n = w.size(), total = n * n * n;
  const std::size_t count = std::min(total, max_triples);
  // a stride coprime to the number of triples spreads the sample over all of them
  std::size_t stride = 7919;
  while (total > 0 && std::gcd(stride, total) != 1) stride += 2;
  std::size_t bad = 0;
  std::string first;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t idx = (t * stride) % total;
    const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
    const Coefficient v = c(w[j], w[k]) + c(concatenate(w[i], w[j]), w[k]) + c(w[i], concatenate(w[j], w[k])) +
                          c(w[i], w[j]);
    if (!v.is_zero() && bad++ == 0) first = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }
  report.add("sampled triples " + std::to_string(count), bad == 0, first);
  return report;
}

CheckReport check_conditions(const CocycleOracle& c, const SampleSet& samples) {
  CheckReport report{"conditions", {}};
  const auto& w = samples.words;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Coefficient base = c(w[i], w[j]);
      require_rank(base, c.rank, "check_conditions");
      const bool stab = c(stabilize_word(w[i], samples.stabilize_to), stabilize_word(w[j], samples.stabilize_to)) == base;
      if (!stab) report.add(pair_name("(1) stabilization", i, j), false);
      for (std::size_t k = 0; k < samples.conjugators.size(); ++k) {
        const SpMatrix& f = samples.conjugators[k];
        if (!(c(conjugate_word(f, w[i]), conjugate_word(f, w[j])) == base)) {
          report.add(pair_name("(2) conjugation", i, j), false, "conjugator " + std::to_string(k));
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < samples.ta.size(); ++a) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!c(samples.ta[a], w[j]).is_zero()) report.add(pair_name("(3) TA left", a, j), false);
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t b = 0; b < samples.tb.size(); ++b) {
      if (!c(w[i], samples.tb[b]).is_zero()) report.add(pair_name("(3) TB right", i, b), false);
    }
  }
  const auto passed = [&](const std::string& prefix) {
    for (const auto& item : report.items) {
      if (item.name.rfind(prefix, 0) == 0) return false;
    }
    return true;
  };
  const bool p1 = passed("(1)"), p2 = passed("(2)"), p3 = passed("(3)");
  report.add("(1) stabilization on samples", p1);
  report.add("(2) conjugation on samples", p2);
  report.add("(3) TA/TB vanishing on samples", p3);
  return report;
}

CheckReport check_trivialization(const TrivializationOracle& q, const CocycleOracle& c, const SampleSet& samples) {
  CheckReport report{"trivialization", {}};
  const auto& w = samples.words;
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Coefficient lhs = q(w[i]) + q(w[j]) + q(concatenate(w[i], w[j]));
      require_rank(lhs, c.rank, "check_trivialization");
      if (!(lhs == c(w[i], w[j])) && bad++ == 0) first = pair_name("pair", i, j);
    }
  }
  report.add("delta q = C on sampled pairs", bad == 0, first);
  return report;
}

WordEvaluator torsor_cochain(const TrivializationOracle& q, const SpMatrix& f) {
  return [q, f](const TorelliWord& w) { return q(conjugate_word(f, w)) + q(w); };
}

CheckReport check_torsor_trivial(const TrivializationOracle& q, const SampleSet& samples) {
  CheckReport report{"torsor", {}};
  for (std::size_t k = 0; k < samples.conjugators.size(); ++k) {
    const WordEvaluator rho = torsor_cochain(q, samples.conjugators[k]);
    std::string witness;
    for (std::size_t i = 0; i < samples.words.size() && witness.empty(); ++i) {
      if (!rho(samples.words[i]).is_zero()) witness = "word " + std::to_string(i);
    }
    report.add("conjugator " + std::to_string(k), witness.empty(), witness);
  }
  return report;
}

AssembledInvariant assemble(const TrivializationOracle& q, const CocycleOracle& c, const Coefficient& x,
                            const SampleSet& samples) {
  if (x.size() != q.rank || c.rank != q.rank) throw std::invalid_argument("assemble: coefficient rank mismatch");
  const CheckReport triv = check_trivialization(q, c, samples);
  if (!triv.passed()) throw std::invalid_argument("assemble: q is not a trivialization of the cocycle on the samples");

  AssembledInvariant out;
  out.evaluate = [q, x](const TorelliWord& w) { return q(w) + mu_x(w, x); };
  out.report.suite = "assemble";
  const WordEvaluator& F = out.evaluate;
  for (std::size_t b = 0; b < samples.tb.size(); ++b) {
    out.report.add("vanishes on TB sample " + std::to_string(b), F(samples.tb[b]).is_zero());
  }
  for (std::size_t a = 0; a < samples.ta.size(); ++a) {
    out.report.add("vanishes on TA sample " + std::to_string(a), F(samples.ta[a]).is_zero());
  }
  std::string stab_witness, coset_witness;
  for (std::size_t i = 0; i < samples.words.size(); ++i) {
    const TorelliWord& w = samples.words[i];
    if (stab_witness.empty() && !(F(stabilize_word(w, samples.stabilize_to)) == F(w))) stab_witness = "word " + std::to_string(i);
    for (const auto& ta : samples.ta) {
      for (const auto& tb : samples.tb) {
        if (coset_witness.empty() && !(F(concatenate(concatenate(ta, w), tb)) == F(w)))
          coset_witness = "word " + std::to_string(i);
      }
    }
  }
  out.report.add("stabilization on samples", stab_witness.empty(), stab_witness);
  out.report.add("F(xi_a w xi_b) = F(w) on samples", coset_witness.empty(), coset_witness);
  return out;
}

}  // namespace torelli
