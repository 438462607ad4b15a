#pragma once

// JSON descriptions of word evaluators, cocycles and sample sets for the
// `assemble` command.
//
// Evaluator ("trivialization") objects, all values in (Z/2)^rank:
//   {"kind": "zero"}
//   {"kind": "mu", "x": [..]}                       x if the Rohlin value is 1
//   {"kind": "sigma_coefficient", "monomial": "a1*b1", "x": [..]}
//   {"kind": "length_parity", "x": [..]}            x if the word length is odd
//   {"kind": "nonempty", "x": [..]}                 x if the word is nonempty
//   {"kind": "table", "default": [..], "entries": [{"letters": [..], "value": [..]}]}
//   {"kind": "sum", "terms": [evaluator, ...]}
// Cocycle objects:
//   {"kind": "zero"}
//   {"kind": "coboundary", "of": evaluator}
//   {"kind": "table", "default": [..], "entries": [{"left": [..], "right": [..], "value": [..]}]}
// Table keys are compared after canonical rendering of the words.
//
// Sample file:
//   {"genus": 4, "standard": true, "seed": 1, "stabilize_to": 5,
//    "words": [[letter, ...], ...], "tb": [...], "ta": [...],
//    "conjugators": [{"matrix": [[..]]}, ...]}
// With "standard" the built-in samples come first and listed ones are appended.
//
// Data file: {"rank": 1, "x": [1], "cocycle": {...}, "trivialization": {...}}

#include <json.hpp>

#include "torelli/assembly.hpp"

namespace torelli {

struct AssemblyData {
  std::size_t rank = 1;
  Coefficient x;
  CocycleOracle cocycle;
  TrivializationOracle trivialization;
};

/// Throws ParseError on malformed input.
TrivializationOracle evaluator_from_json(const nlohmann::json& j, std::size_t rank, int g);
CocycleOracle cocycle_from_json(const nlohmann::json& j, std::size_t rank, int g);
SampleSet samples_from_json(const nlohmann::json& j);
AssemblyData assembly_data_from_json(const nlohmann::json& j, int g);

nlohmann::json report_to_json(const CheckReport& r);

}  // namespace torelli
