#pragma once

// Aggregated invariant reports, their JSON forms, and the knot catalog.
//
// JSON conventions, used by the CLI and the Python bindings alike:
//   - integer polynomials: object mapping exponent (as a string) to the
//     integer coefficient, zero coefficients omitted;
//   - mod-2 polynomials: sorted array of the exponents with coefficient 1;
//   - link diagrams: components as arrays of passage-token strings;
//   - move scripts: array of site descriptor objects.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/polynomial.hpp"
#include "vk/surgery.hpp"

namespace vk {

struct InvariantReport {
  std::string code;  // canonical rendering
  std::int64_t writhe = 0;
  IntPolynomial gamma;
  Mod2Polynomial gamma_bar;
  Mod2Polynomial gamma2_bar;
  std::map<std::string, Parity> parities;  // per-chord parity
  std::size_t pair_count = 0;              // |P|: interlaced opposite-parity pairs

  bool operator==(const InvariantReport&) const = default;
};

// Computes every report field from the fast path and cross-checks the
// internal identities (gamma at t=1 equals the writhe, gamma_bar is gamma
// mod 2) before returning.
InvariantReport build_report(const GaussCode& code);

nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const Mod2Polynomial& p);
nlohmann::json to_json(const InvariantReport& report);
nlohmann::json to_json(const LinkDiagram& link);
nlohmann::json to_json(const MoveSite& site);
nlohmann::json to_json(const std::vector<MoveSite>& script);

// Smoothing output for the CLI: components plus linking data when the result
// has exactly two components.
nlohmann::json smoothing_json(const SmoothingResult& result);

IntPolynomial int_polynomial_from_json(const nlohmann::json& j);
Mod2Polynomial mod2_polynomial_from_json(const nlohmann::json& j);
InvariantReport report_from_json(const nlohmann::json& j);
MoveSite move_site_from_json(const nlohmann::json& j);
std::vector<MoveSite> move_script_from_json(const nlohmann::json& j);

std::string render_report_text(const InvariantReport& report);

// One catalog line: name, code text, optional expected values.  The expected
// object may carry "writhe", "gamma", "gamma_bar", "gamma2_bar" (in the JSON
// forms above) and a free-text "note".
struct CatalogEntry {
  std::string name;
  std::string code;
  std::optional<nlohmann::json> expected;
};

// Tab-separated file, one entry per line: name, code, optional expected
// JSON.  Blank lines and lines starting with '#' are skipped.
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct CatalogCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Recomputes each entry and compares against its expected values; also runs
// the surgery oracles so catalog values are double-checked on every verify.
std::vector<CatalogCheck> verify_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace vk
