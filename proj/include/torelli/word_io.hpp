#pragma once

// JSON form of Torelli words:
//
//   {"genus": 2, "letters": [
//     {"type": "bscc", "pairs": [[c, d], ...]},
//     {"type": "bp", "e": x, "pairs": [[c, d], ...]},
//     {"type": "twist", "class": x, "power": -1},
//     {"type": "conj", "by": {"matrix": [[...], ...]}, "inner": {...}},
//     {"type": "conj", "by": {"word": [letter, ...]}, "inner": {...}}]}
//
// Classes are integer arrays of length 2g in the order a_1..a_g, b_1..b_g.
// A "by" word is replaced by its symplectic image on parsing.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torelli/words.hpp"

namespace torelli {

/// Malformed input. `letter` is the index of the offending top-level letter.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::optional<std::size_t> letter = std::nullopt);
  [[nodiscard]] std::optional<std::size_t> letter() const { return letter_; }

private:
  std::optional<std::size_t> letter_;
};

/// Well-formed input that violates a letter's homological conditions.
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& message, std::optional<std::size_t> letter = std::nullopt);
  [[nodiscard]] std::optional<std::size_t> letter() const { return letter_; }

private:
  std::optional<std::size_t> letter_;
};

/// Structural parsing only; throws ParseError.
TorelliWord word_from_json(const nlohmann::json& j);
TorelliWord parse_word(const std::string& text);
/// Reads a file; throws ParseError when it cannot be opened or parsed.
TorelliWord read_word_file(const std::string& path);
/// Parses and validates; throws ParseError or ValidationError.
TorelliWord read_valid_word_file(const std::string& path);

nlohmann::json spec_to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const nlohmann::json& j, int g);
nlohmann::json word_to_json(const TorelliWord& w);
nlohmann::json class_to_json(const HClass& x);
HClass class_from_json(const nlohmann::json& j, int g);
nlohmann::json matrix_to_json(const SpMatrix& m);
SpMatrix matrix_from_json(const nlohmann::json& j, int g);

}  // namespace torelli
