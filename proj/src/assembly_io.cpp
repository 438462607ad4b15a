#include "torelli/assembly_io.hpp"

#include <map>

#include "torelli/word_io.hpp"

namespace torelli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw ParseError(std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

Coefficient coefficient(const json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank)
    throw ParseError("coefficient must be a 0/1 array of length " + std::to_string(rank));
  Coefficient v(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer() || (j[i].get<int>() != 0 && j[i].get<int>() != 1))
      throw ParseError("coefficient entries must be 0 or 1");
    v.set(i, j[i].get<int>() == 1);
  }
  return v;
}

TorelliWord letters_word(const json& j, int g) {
  return word_from_json(json{{"genus", g}, {"letters", j}});
}

std::string key_of(const TorelliWord& w) { return word_to_json(w).dump(); }

std::vector<TorelliWord> word_list(const json& j, int g) {
  if (!j.is_array()) throw ParseError("word lists must be arrays of letter arrays");
  std::vector<TorelliWord> out;
  for (const json& letters : j) {
    TorelliWord w = letters_word(letters, g);
    if (const ValidationReport r = validate(w); !r.ok()) throw ValidationError(r.violation);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TrivializationOracle evaluator_from_json(const json& j, std::size_t rank, int g) {
  const std::string kind = string_field(j, "kind");
  if (kind == "zero") return zero_trivialization(rank);
  if (kind == "mu") return mu_trivialization(coefficient(field(j, "x"), rank));
  if (kind == "sigma_coefficient") {
    const std::string text = string_field(j, "monomial");
    try {
      parse_monomial(text, g);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    const Coefficient x = coefficient(field(j, "x"), rank);
    return {rank, [text, x](const TorelliWord& w) {
              return sigma_word(w).contains(parse_monomial(text, w.genus)) ? x : Coefficient(x.size());
            }};
  }
  if (kind == "length_parity" || kind == "nonempty") {
    const Coefficient x = coefficient(field(j, "x"), rank);
    const bool parity = kind == "length_parity";
    return {rank, [x, parity](const TorelliWord& w) {
              const bool on = parity ? w.letters.size() % 2 == 1 : !w.letters.empty();
              return on ? x : Coefficient(x.size());
            }};
  }
  if (kind == "table") {
    const Coefficient fallback = coefficient(field(j, "default"), rank);
    std::map<std::string, Coefficient> table;
    for (const json& e : field(j, "entries")) {
      table[key_of(letters_word(field(e, "letters"), g))] = coefficient(field(e, "value"), rank);
    }
    return {rank, [table, fallback](const TorelliWord& w) {
              const auto it = table.find(key_of(w));
              return it == table.end() ? fallback : it->second;
            }};
  }
  if (kind == "sum") {
    std::vector<TrivializationOracle> terms;
    for (const json& t : field(j, "terms")) terms.push_back(evaluator_from_json(t, rank, g));
    return {rank, [terms, rank](const TorelliWord& w) {
              Coefficient v(rank);
              for (const auto& t : terms) v += t(w);
              return v;
            }};
  }
  throw ParseError("unknown evaluator kind '" + kind + "'");
}

CocycleOracle cocycle_from_json(const json& j, std::size_t rank, int g) {
  const std::string kind = string_field(j, "kind");
  if (kind == "zero") return zero_cocycle(rank);
  if (kind == "coboundary") return coboundary(evaluator_from_json(field(j, "of"), rank, g));
  if (kind == "table") {
    const Coefficient fallback = coefficient(field(j, "default"), rank);
    std::map<std::pair<std::string, std::string>, Coefficient> table;
    for (const json& e : field(j, "entries")) {
      table[{key_of(letters_word(field(e, "left"), g)), key_of(letters_word(field(e, "right"), g))}] =
          coefficient(field(e, "value"), rank);
    }
    return {rank, [table, fallback](const TorelliWord& phi, const TorelliWord& psi) {
              const auto it = table.find({key_of(phi), key_of(psi)});
              return it == table.end() ? fallback : it->second;
            }};
  }
  throw ParseError("unknown cocycle kind '" + kind + "'");
}

SampleSet samples_from_json(const json& j) {
  const json& genus = field(j, "genus");
  if (!genus.is_number_integer() || genus.get<int>() < 2 || genus.get<int>() > 15)
    throw ParseError("'genus' must be an integer in [2, 15]");
  const int g = genus.get<int>();
  SampleSet s;
  if (j.value("standard", false)) {
    s = standard_samples(g, j.value("seed", std::uint64_t{1}));
  } else {
    s.genus = g;
    s.stabilize_to = g + 1;
  }
  if (j.contains("stabilize_to")) s.stabilize_to = j.at("stabilize_to").get<int>();
  if (s.stabilize_to < g || s.stabilize_to > 16) throw ParseError("'stabilize_to' out of range");
  const auto append = [&](const char* name, std::vector<TorelliWord>& into) {
    if (!j.contains(name)) return;
    for (auto& w : word_list(j.at(name), g)) into.push_back(std::move(w));
  };
  append("words", s.words);
  append("tb", s.tb);
  append("ta", s.ta);
  if (j.contains("conjugators")) {
    for (const json& c : j.at("conjugators")) {
      SpMatrix f = matrix_from_json(field(c, "matrix"), g);
      if (!is_symplectic(f)) throw ValidationError("conjugator is not symplectic");
      s.conjugators.push_back(std::move(f));
    }
  }
  return s;
}

AssemblyData assembly_data_from_json(const json& j, int g) {
  AssemblyData d;
  const json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<int>() < 1) throw ParseError("'rank' must be a positive integer");
  d.rank = rank.get<std::size_t>();
  d.x = coefficient(field(j, "x"), d.rank);
  d.cocycle = j.contains("cocycle") ? cocycle_from_json(j.at("cocycle"), d.rank, g) : zero_cocycle(d.rank);
  d.trivialization = j.contains("trivialization") ? evaluator_from_json(j.at("trivialization"), d.rank, g)
                                                  : zero_trivialization(d.rank);
  return d;
}

json report_to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json item = {{"name", i.name}, {"passed", i.passed}};
    if (!i.detail.empty()) item["detail"] = i.detail;
    items.push_back(item);
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"items", items}};
}

}  // namespace torelli
