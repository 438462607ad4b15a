// Command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
// 3 validation error, 4 mismatch against a known value.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torelli/assembly_io.hpp"
#include "torelli/bcj.hpp"
#include "torelli/checks.hpp"
#include "torelli/coinvariants.hpp"
#include "torelli/word_io.hpp"

using nlohmann::json;
using namespace torelli;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kInvalid = 3, kMismatch = 4 };

TorelliWord read_torelli_word(const std::string& path) {
  TorelliWord w = read_valid_word_file(path);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (!is_torelli_letter(w.letters[i])) throw ValidationError("sigma is undefined on a plain twist", i);
  }
  return w;
}

json terms_json(const BoolElement& p) {
  json terms = json::array();
  for (Monomial m : p.terms()) {
    json support = json::array();
    if (m != 0) {
      std::stringstream ss(monomial_to_string(m, p.genus()));
      for (std::string tok; std::getline(ss, tok, '*');) support.push_back(tok);
    }
    terms.push_back(support);
  }
  return terms;
}

int cmd_sigma(const std::string& path, const std::string& format) {
  const TorelliWord w = read_torelli_word(path);
  const BoolElement s = sigma_word(w);
  if (format == "json") {
    std::cout << json{{"genus", w.genus}, {"terms", terms_json(s)}}.dump() << "\n";
  } else {
    std::cout << s.to_string() << "\n";
  }
  return kOk;
}

int cmd_rohlin(const std::string& path, const std::string& format) {
  const TorelliWord w = read_torelli_word(path);
  const bool mu = rohlin(w);
  if (format == "json") {
    std::cout << json{{"genus", w.genus}, {"rohlin", mu ? 1 : 0}}.dump() << "\n";
  } else {
    std::cout << (mu ? 1 : 0) << "\n";
  }
  return kOk;
}

int cmd_psi(const std::string& path, const std::string& format) {
  const TorelliWord w = read_valid_word_file(path);
  const SpMatrix m = psi_of_word(w);
  if (format == "json") {
    std::cout << json{{"genus", w.genus}, {"matrix", matrix_to_json(m)}}.dump() << "\n";
  } else {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "") << m(r, c);
      std::cout << "\n";
    }
  }
  return kOk;
}

std::string braces(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return "{" + out + "}";
}

int cmd_coinv(int g, int degree, const std::string& module, bool assert_known, const std::string& format) {
  bool mismatch = false;
  json out = {{"module", module}, {"genus", g}};
  std::ostringstream text;
  text << "module " << module << " genus " << g << "\n";
  if (module == "boolean") {
    if (g < 2 || g > 8) throw std::out_of_range("--genus must lie in [2, 8] for the boolean module");
    if (degree < 0 || degree > 2 * g) throw std::out_of_range("--degree out of range");
    CoinvariantTable table;
    if (g >= 3 && degree <= 3) {
      table = verify_lemma_coinvariants(g, degree);
    } else {
      table.genus = g;
      for (int k = 0; k <= degree; ++k) {
        const CoinvariantResult r = coinvariants(gl_action_on_boolean(g, k));
        table.rows.push_back({k, r.quotient_dimension(), r.representative_labels(), std::nullopt, std::nullopt});
      }
    }
    json rows = json::array();
    for (const auto& row : table.rows) {
      json jr = {{"degree", row.degree}, {"dimension", row.dimension}, {"representatives", row.representatives}};
      text << "degree " << row.degree << ": dim " << row.dimension << " reps " << braces(row.representatives);
      if (row.asserted()) {
        jr["expected"] = *row.expected_dimension;
        jr["ok"] = row.matches();
        text << " [expected " << *row.expected_dimension << ": " << (row.matches() ? "ok" : "MISMATCH") << "]";
        mismatch = mismatch || !row.matches();
      }
      text << "\n";
      rows.push_back(jr);
    }
    out["rows"] = rows;
  } else {
    if (g < 2 || g > 8) throw std::out_of_range("--genus must lie in [2, 8] for the lambda3 module");
    const CoinvariantResult r = coinvariants(gl_action_on_lambda3(g));
    const std::size_t graded = coinvariants(gl_action_on_boolean_graded(g, 3)).quotient_dimension();
    out["dimension"] = r.quotient_dimension();
    out["representatives"] = r.representative_labels();
    out["graded_boolean_dimension"] = graded;
    text << "dim " << r.quotient_dimension() << " reps " << braces(r.representative_labels()) << "\n";
    text << "B3/B2 dim " << graded << "\n";
    if (g >= 4) {
      const bool ok = r.quotient_dimension() == 0;
      out["expected"] = 0;
      out["ok"] = ok;
      text << "[expected 0: " << (ok ? "ok" : "MISMATCH") << "]\n";
      mismatch = mismatch || !ok;
    }
  }
  std::cout << (format == "json" ? out.dump() + "\n" : text.str());
  return assert_known && mismatch ? kMismatch : kOk;
}

int cmd_verify(const std::string& suite, int g, const std::string& format) {
  std::vector<CheckReport> reports;
  const bool all = suite == "all";
  if (all || suite == "sg-lifts") reports.push_back(verify_sg_lifts(g));
  if (all || suite == "luft") reports.push_back(verify_luft_conjugation(g));
  if (all || suite == "ia") reports.push_back(verify_ia_relation(g));
  if (all || suite == "lantern") reports.push_back(verify_lantern_sigma(g));
  if (all || suite == "equivariance") reports.push_back(verify_equivariance(g, 500, 20240601));
  if (all || suite == "lemma-coinv") reports.push_back(verify_lemma_coinvariants_report(g));
  bool ok = true;
  json suites = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    suites.push_back(report_to_json(r));
  }
  if (format == "json") {
    std::cout << json{{"genus", g}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      for (const auto& item : r.items) {
        std::cout << (item.passed ? "PASS " : "FAIL ") << r.suite << "/" << item.name;
        if (!item.detail.empty()) std::cout << "  " << item.detail;
        std::cout << "\n";
      }
    }
    std::cout << (ok ? "all identities hold" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kFailed;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

int cmd_assemble(const std::string& samples_path, const std::string& data_path, const std::string& format) {
  const SampleSet samples = samples_from_json(read_json_file(samples_path));
  const AssemblyData data = assembly_data_from_json(read_json_file(data_path), samples.genus);
  std::vector<CheckReport> reports;
  reports.push_back(check_cocycle_identity(data.cocycle, samples));
  reports.push_back(check_conditions(data.cocycle, samples));
  reports.push_back(check_trivialization(data.trivialization, data.cocycle, samples));
  reports.push_back(check_torsor_trivial(data.trivialization, samples));
  if (reports[2].passed()) {
    reports.push_back(assemble(data.trivialization, data.cocycle, data.x, samples).report);
  }
  bool ok = true;
  json suites = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    suites.push_back(report_to_json(r));
  }
  if (format == "text") {
    for (const auto& r : reports) std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "\n";
    std::cout << "note: all checks run on samples only\n";
  } else {
    std::cout << json{{"genus", samples.genus}, {"passed", ok}, {"sampled", true}, {"reports", suites}}.dump(2) << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_search(int g, std::size_t limit, const std::string& format) {
  const auto found = find_rohlin_nontrivial(g, limit);
  if (format == "json") {
    json words = json::array();
    for (const auto& s : found) words.push_back(word_to_json(TorelliWord{g, {s}}));
    std::cout << json{{"genus", g}, {"words", words}}.dump() << "\n";
  } else {
    for (const auto& s : found) std::cout << describe(s) << "\n";
  }
  return found.empty() ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic representation, Boolean algebra and BCJ computations on Torelli words"};
  app.require_subcommand(1);
  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string path;
  auto* sigma = app.add_subcommand("sigma", "BCJ image of a word file");
  sigma->add_option("path", path, "Word file (JSON)")->required();
  add_format(sigma);
  auto* roh = app.add_subcommand("rohlin", "Rohlin invariant of a word file");
  roh->add_option("path", path, "Word file (JSON)")->required();
  add_format(roh);
  auto* psi = app.add_subcommand("psi", "Symplectic image of a word file");
  psi->add_option("path", path, "Word file (JSON)")->required();
  add_format(psi);

  int genus = 4, degree = 3;
  std::string module = "boolean";
  bool assert_known = false;
  auto* coinv = app.add_subcommand("coinv", "GL_g(Z)-coinvariants of B_k or Lambda^3 H_2");
  coinv->add_option("--genus", genus, "Genus")->capture_default_str();
  coinv->add_option("--degree", degree, "Largest degree")->capture_default_str();
  coinv->add_option("--module", module, "Module")->check(CLI::IsMember({"boolean", "lambda3"}))->capture_default_str();
  coinv->add_flag("--assert-paper", assert_known, "Exit 4 if a known dimension does not match");
  add_format(coinv);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"sg-lifts", "luft", "ia", "lantern", "equivariance", "lemma-coinv", "all"}));
  verify->add_option("--genus", genus, "Genus")->capture_default_str();
  add_format(verify);

  std::string samples_path, data_path;
  auto* asmb = app.add_subcommand("assemble", "Check a cocycle and trivialization on samples");
  asmb->add_option("--samples", samples_path, "Sample file (JSON)")->required();
  asmb->add_option("--data", data_path, "Cocycle and trivialization file (JSON)")->required();
  add_format(asmb);

  int search_genus = 2;
  std::size_t limit = 1;
  auto* search = app.add_subcommand("search", "Find genus-1 BSCC letters with Rohlin value 1");
  search->add_option("--genus", search_genus, "Genus (1..3)")->capture_default_str();
  search->add_option("--limit", limit, "Number of hits")->capture_default_str();
  add_format(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*sigma) return cmd_sigma(path, format);
    if (*roh) return cmd_rohlin(path, format);
    if (*psi) return cmd_psi(path, format);
    if (*coinv) return cmd_coinv(genus, degree, module, assert_known, format);
    if (*verify) return cmd_verify(suite, genus, format);
    if (*asmb) return cmd_assemble(samples_path, data_path, asmb->count("--format") ? format : "json");
    if (*search) return cmd_search(search_genus, limit, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kInvalid;
  }
  return kParse;
}
