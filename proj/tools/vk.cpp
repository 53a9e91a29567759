// vk: invariants of virtual knots given by signed Gauss codes.
//
// Exit codes are a stable contract:
//   0  success
//   2  parse/validation error (bad code text, bad flags, unreadable files)
//   3  oracle mismatch (fast path disagrees with surgery, or catalog values
//      disagree with computed ones)
//   4  property failure reported by selftest

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vk/errors.hpp"
#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/report.hpp"
#include "vk/selftest.hpp"
#include "vk/surgery.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitOracle = 3;
constexpr int kExitProperty = 4;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

// One code per line; blank lines and '#' comments are skipped.
std::vector<std::pair<std::size_t, std::string>> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vk::DomainError("cannot open input file '" + path + "'");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.emplace_back(number, line);
  }
  return lines;
}

std::string catalog_path() {
  if (const char* env = std::getenv("VK_CATALOG")) return env;
  return "data/catalog.tsv";
}

// Check the fast-path report against the surgery oracles.  `inject_fault`
// silently perturbs the oracle's input so the mismatch path can be exercised
// end to end.
bool oracle_agrees(const vk::GaussCode& code, const vk::InvariantReport& report,
                   bool inject_fault, std::string& detail) {
  vk::GaussCode oracle_input = code;
  if (inject_fault && !code.empty()) {
    oracle_input = vk::switch_crossing(code, code.labels().front());
  }
  if (!(vk::gamma_oracle(oracle_input) == report.gamma)) {
    detail = "gamma oracle disagrees with the fast path";
    return false;
  }
  if (!(vk::gamma2_oracle(oracle_input) == report.gamma2_bar)) {
    detail = "gamma2 oracle disagrees with the fast path";
    return false;
  }
  return true;
}

int run_invariants(const std::string& code_text, bool have_code, const std::string& file,
                   bool as_json, bool with_oracle, bool inject_fault) {
  std::vector<std::pair<std::size_t, std::string>> inputs;
  if (have_code == !file.empty()) {
    std::cerr << "vk: give exactly one of CODE or --file\n";
    return kExitParse;
  }
  if (have_code) {
    inputs.emplace_back(0, code_text);
  } else {
    inputs = read_batch(file);
  }

  nlohmann::json batch = nlohmann::json::array();
  bool first = true;
  for (const auto& [line, text] : inputs) {
    vk::GaussCode code;
    try {
      code = vk::parse_gauss_code(text);
    } catch (const vk::Error& error) {
      if (line > 0) std::cerr << "vk: line " << line << ": " << error.what() << "\n";
      else std::cerr << "vk: " << error.what() << "\n";
      return kExitParse;
    }
    vk::InvariantReport report = vk::build_report(code);
    if (with_oracle) {
      std::string detail;
      if (!oracle_agrees(code, report, inject_fault, detail)) {
        std::cerr << "vk: oracle mismatch on '" << report.code << "': " << detail << "\n";
        return kExitOracle;
      }
    }
    if (as_json) {
      batch.push_back(vk::to_json(report));
    } else {
      if (!first) std::cout << "\n";
      std::cout << vk::render_report_text(report);
      first = false;
    }
  }
  if (as_json) {
    if (have_code) {
      std::cout << batch.at(0).dump(2) << "\n";
    } else {
      std::cout << batch.dump(2) << "\n";
    }
  }
  return 0;
}

int run_smooth(const std::string& code_text, const std::string& labels_csv) {
  vk::GaussCode code = vk::parse_gauss_code(code_text);
  vk::SmoothingResult result = vk::smooth(code, split_csv(labels_csv));
  std::cout << vk::smoothing_json(result).dump(2) << "\n";
  return 0;
}

std::set<vk::MoveKind> parse_allowed(const std::string& csv) {
  std::set<vk::MoveKind> allowed;
  for (const std::string& token : split_csv(csv)) {
    if (token == "r1") {
      allowed.insert(vk::MoveKind::R1Insert);
      allowed.insert(vk::MoveKind::R1Delete);
    } else if (token == "r2") {
      allowed.insert(vk::MoveKind::R2Insert);
      allowed.insert(vk::MoveKind::R2Delete);
    } else if (token == "r3") {
      allowed.insert(vk::MoveKind::R3);
    } else {
      throw vk::DomainError("unknown move class '" + token + "' (use r1, r2, r3)");
    }
  }
  return allowed;
}

int run_moves(const std::string& code_text, const std::string& script_path,
              std::size_t scramble_steps, bool have_scramble, const std::string& allowed_csv,
              std::uint64_t seed, bool as_json) {
  if (script_path.empty() == !have_scramble) {
    std::cerr << "vk: give exactly one of --script or --scramble\n";
    return kExitParse;
  }
  vk::GaussCode before = vk::parse_gauss_code(code_text);
  vk::GaussCode after = before;
  std::vector<vk::MoveSite> applied;
  if (!script_path.empty()) {
    std::ifstream in(script_path);
    if (!in) throw vk::DomainError("cannot open script file '" + script_path + "'");
    nlohmann::json parsed = nlohmann::json::parse(in, nullptr, false);
    if (parsed.is_discarded()) throw vk::DomainError("script is not valid JSON");
    for (const vk::MoveSite& site : vk::move_script_from_json(parsed)) {
      after = vk::apply_move(after, site);
      applied.push_back(site);
    }
  } else {
    vk::ScrambleResult result =
        vk::scramble(before, seed, scramble_steps, parse_allowed(allowed_csv));
    after = result.code;
    applied = result.applied;
  }
  vk::InvariantReport report_before = vk::build_report(before);
  vk::InvariantReport report_after = vk::build_report(after);
  if (as_json) {
    nlohmann::json out{{"before", vk::to_json(report_before)},
                       {"after", vk::to_json(report_after)},
                       {"result", after.render()},
                       {"applied", vk::to_json(applied)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "before:\n" << vk::render_report_text(report_before);
    std::cout << "\nafter:\n" << vk::render_report_text(report_after);
    std::cout << "\nresult:  " << (after.empty() ? "(empty)" : after.render()) << "\n";
    std::cout << "applied: " << applied.size() << " moves\n";
  }
  return 0;
}

int cmd_selftest(const vk::SelfTestOptions& options) {
  vk::SelfTestReport report = vk::run_selftest(options);
  std::cout << vk::render_selftest_text(report);
  return report.all_passed() ? 0 : kExitProperty;
}

int run_catalog_list(const std::string& path) {
  for (const vk::CatalogEntry& entry : vk::load_catalog(path)) {
    std::cout << entry.name << "\t" << entry.code;
    if (entry.expected && entry.expected->contains("note")) {
      std::cout << "\t# " << entry.expected->at("note").get<std::string>();
    }
    std::cout << "\n";
  }
  return 0;
}

int run_catalog_show(const std::string& path, const std::string& name) {
  for (const vk::CatalogEntry& entry : vk::load_catalog(path)) {
    if (entry.name != name) continue;
    std::cout << "name:        " << entry.name << "\n";
    if (entry.expected && entry.expected->contains("note")) {
      std::cout << "note:        " << entry.expected->at("note").get<std::string>() << "\n";
    }
    std::cout << vk::render_report_text(vk::build_report(vk::parse_gauss_code(entry.code)));
    return 0;
  }
  std::cerr << "vk: no catalog entry named '" << name << "'\n";
  return kExitParse;
}

int run_catalog_verify(const std::string& path) {
  std::vector<vk::CatalogCheck> checks = vk::verify_catalog(vk::load_catalog(path));
  bool all_ok = true;
  for (const vk::CatalogCheck& check : checks) {
    if (check.ok) {
      std::cout << "OK   " << check.name << "\n";
    } else {
      all_ok = false;
      std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
    }
  }
  std::cout << (all_ok ? "catalog verified" : "catalog verification failed") << " ("
            << checks.size() << " entries)\n";
  return all_ok ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual knot invariants from signed Gauss codes"};
  app.require_subcommand(1);

  // invariants
  std::string inv_code;
  std::string inv_file;
  bool inv_json = false, inv_oracle = false, inv_fault = false;
  CLI::App* inv = app.add_subcommand("invariants", "compute writhe, gamma, gamma_bar, gamma2_bar");
  inv->add_option("code", inv_code, "signed Gauss code, e.g. O1-U2-O3-U1-O2-U3-");
  inv->add_option("--file", inv_file, "batch file: one code per line, # comments");
  inv->add_flag("--json", inv_json, "emit JSON instead of text");
  inv->add_flag("--oracle", inv_oracle, "recompute via surgery and fail on mismatch");
  inv->add_flag("--inject-fault", inv_fault, "perturb the oracle input (debugging aid)")
      ->group("");

  // smooth
  std::string smooth_code, smooth_labels;
  CLI::App* smo = app.add_subcommand("smooth", "smooth crossings and report the link");
  smo->add_option("code", smooth_code, "signed Gauss code")->required();
  smo->add_option("--labels", smooth_labels, "comma-separated crossing labels")->required();

  // moves
  std::string moves_code, moves_script, moves_allowed = "r2,r3";
  std::size_t moves_steps = 0;
  std::uint64_t moves_seed = 1729;
  bool moves_json = false;
  CLI::App* mov = app.add_subcommand("moves", "apply a move script or a random scramble");
  mov->add_option("code", moves_code, "signed Gauss code")->required();
  CLI::Option* script_opt = mov->add_option("--script", moves_script, "JSON move script to replay");
  CLI::Option* scramble_opt =
      mov->add_option("--scramble", moves_steps, "number of random moves to apply");
  script_opt->excludes(scramble_opt);
  mov->add_option("--allowed", moves_allowed, "move classes for --scramble (default r2,r3)");
  mov->add_option("--seed", moves_seed, "random seed (default 1729)");
  mov->add_flag("--json", moves_json, "emit JSON instead of text");

  // selftest
  vk::SelfTestOptions st_options;
  CLI::App* st = app.add_subcommand("selftest", "run the randomized property suite");
  st->add_option("--max-n", st_options.max_n, "largest crossing count (default 10)");
  st->add_option("--count", st_options.count, "number of random codes (default 300)");
  st->add_option("--seed", st_options.seed, "random seed (default 1729)");
  st->add_flag("--inject-fault", st_options.inject_fault,
               "corrupt one oracle-bridge input (debugging aid)")
      ->group("");

  // catalog
  CLI::App* cat = app.add_subcommand("catalog", "inspect and verify the knot catalog");
  cat->require_subcommand(1);
  CLI::App* cat_verify = cat->add_subcommand("verify", "recompute and check every entry");
  CLI::App* cat_list = cat->add_subcommand("list", "list entry names and codes");
  std::string cat_name;
  CLI::App* cat_show = cat->add_subcommand("show", "show one entry's report");
  cat_show->add_option("name", cat_name, "entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (inv->parsed()) {
      return run_invariants(inv_code, inv->count("code") > 0, inv_file, inv_json, inv_oracle,
                            inv_fault);
    }
    if (smo->parsed()) return run_smooth(smooth_code, smooth_labels);
    if (mov->parsed()) {
      return run_moves(moves_code, moves_script, moves_steps, scramble_opt->count() > 0,
                       moves_allowed, moves_seed, moves_json);
    }
    if (st->parsed()) return cmd_selftest(st_options);
    if (cat->parsed()) {
      std::string path = catalog_path();
      if (cat_verify->parsed()) return run_catalog_verify(path);
      if (cat_list->parsed()) return run_catalog_list(path);
      if (cat_show->parsed()) return run_catalog_show(path, cat_name);
    }
  } catch (const vk::Error& error) {
    std::cerr << "vk: " << error.what() << "\n";
    return kExitParse;
  }
  return 0;
}
