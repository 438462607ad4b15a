#include "torelli/word_io.hpp"

#include <fstream>
#include <sstream>

namespace torelli {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::optional<std::size_t> letter)
    : std::runtime_error(letter ? "letter " + std::to_string(*letter) + ": " + message : message), letter_(letter) {}

ValidationError::ValidationError(const std::string& message, std::optional<std::size_t> letter)
    : std::runtime_error(letter ? "letter " + std::to_string(*letter) + ": " + message : message), letter_(letter) {}

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

Integer integer(const json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<Integer>();
}

SymplecticPairList pairs_from_json(const json& j, int g) {
  if (!j.is_array()) throw ParseError("'pairs' must be an array");
  SymplecticPairList out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [c, d]");
    out.push_back({class_from_json(p[0], g), class_from_json(p[1], g)});
  }
  return out;
}

json pairs_to_json(const SymplecticPairList& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(json::array({class_to_json(p.c), class_to_json(p.d)}));
  return out;
}

}  // namespace

json class_to_json(const HClass& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x(i));
  return out;
}

HClass class_from_json(const json& j, int g) {
  if (!j.is_array()) throw ParseError("homology class must be an integer array");
  if (j.size() != static_cast<std::size_t>(2 * g))
    throw ParseError("homology class has length " + std::to_string(j.size()) + ", expected " + std::to_string(2 * g));
  HClass x(2 * g);
  for (int i = 0; i < 2 * g; ++i) x(i) = integer(j[static_cast<std::size_t>(i)]);
  return x;
}

json matrix_to_json(const SpMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

SpMatrix matrix_from_json(const json& j, int g) {
  const auto n = static_cast<std::size_t>(2 * g);
  if (!j.is_array() || j.size() != n) throw ParseError("matrix must have " + std::to_string(n) + " rows");
  SpMatrix m(2 * g, 2 * g);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix must have " + std::to_string(n) + " columns");
    for (std::size_t c = 0; c < n; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = integer(j[r][c]);
  }
  return m;
}

GeneratorSpec spec_from_json(const json& j, int g) {
  const json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "bscc") return make_bscc(pairs_from_json(field(j, "pairs"), g));
  if (t == "bp") return make_bp(class_from_json(field(j, "e"), g), pairs_from_json(field(j, "pairs"), g));
  if (t == "twist") {
    const Integer power = j.contains("power") ? integer(j.at("power")) : 1;
    return make_twist(class_from_json(field(j, "class"), g), power);
  }
  if (t == "conj") {
    const json& by = field(j, "by");
    SpMatrix f;
    if (by.is_object() && by.contains("matrix")) {
      f = matrix_from_json(by.at("matrix"), g);
    } else if (by.is_object() && by.contains("word")) {
      const json& letters = by.at("word");
      if (!letters.is_array()) throw ParseError("'word' must be an array of letters");
      TorelliWord w{g, {}};
      for (const json& l : letters) w.letters.push_back(spec_from_json(l, g));
      if (const ValidationReport r = validate(w); !r.ok()) throw ParseError("conjugating word: " + r.violation);
      f = psi_of_word(w);
    } else {
      throw ParseError("'by' needs a 'matrix' or a 'word'");
    }
    return make_conj(std::move(f), spec_from_json(field(j, "inner"), g));
  }
  throw ParseError("unknown letter type '" + t + "'");
}

json spec_to_json(const GeneratorSpec& spec) {
  if (const auto* s = std::get_if<Bscc>(&spec.value)) return {{"type", "bscc"}, {"pairs", pairs_to_json(s->pairs)}};
  if (const auto* s = std::get_if<BoundingPair>(&spec.value))
    return {{"type", "bp"}, {"e", class_to_json(s->e)}, {"pairs", pairs_to_json(s->pairs)}};
  if (const auto* s = std::get_if<Twist>(&spec.value))
    return {{"type", "twist"}, {"class", class_to_json(s->x)}, {"power", s->power}};
  const auto& c = std::get<Conj>(spec.value);
  return {{"type", "conj"}, {"by", {{"matrix", matrix_to_json(c.by)}}}, {"inner", spec_to_json(*c.inner)}};
}

TorelliWord word_from_json(const json& j) {
  const json& genus = field(j, "genus");
  if (!genus.is_number_integer() || genus.get<int>() < 1 || genus.get<int>() > 16)
    throw ParseError("'genus' must be an integer in [1, 16]");
  const json& letters = field(j, "letters");
  if (!letters.is_array()) throw ParseError("'letters' must be an array");
  TorelliWord w{genus.get<int>(), {}};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    try {
      w.letters.push_back(spec_from_json(letters[i], w.genus));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), i);
    }
  }
  return w;
}

TorelliWord parse_word(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return word_from_json(j);
}

TorelliWord read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_word(buf.str());
}

TorelliWord read_valid_word_file(const std::string& path) {
  TorelliWord w = read_word_file(path);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (const ValidationReport r = validate(w.letters[i]); !r.ok()) throw ValidationError(r.violation, i);
  }
  return w;
}

json word_to_json(const TorelliWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters) letters.push_back(spec_to_json(l));
  return {{"genus", w.genus}, {"letters", letters}};
}

}  // namespace torelli
