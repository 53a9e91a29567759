// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
//
// Every bound checked here (golden values, corpus sizes, time limits, the
// pinned search snapshot) is fixed in this file on purpose: the suite is the
// contract.  Seeds are constants so each run examines the same corpus.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "support.hpp"
#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/polynomial.hpp"
#include "vk/random.hpp"
#include "vk/surgery.hpp"

using namespace vk;
using Clock = std::chrono::steady_clock;

namespace {

const char* kTrefoil = "O1-U2-O3-U1-O2-U3-";
const char* kVirtualTrefoil = "O1-O2-U1-U2-";
const char* kFigureEight = "O1+U2+O3-U4-O2+U1+O4-U3-";
const char* kMiyazawaValue = "O1+O2+U1+U2+O3+U3+O4+U4+";

constexpr std::uint64_t kCorpusSeed = 1729;
constexpr std::size_t kRandomCorpusSize = 10000;  // criterion 2

// Criterion 8 search parameters and its pinned result.  The snapshot was
// recorded from the first run of this search and must never drift: the same
// seed has to find the same code at the same candidate index.
constexpr std::uint64_t kSearchSeed = 271828;
constexpr std::size_t kSearchMinimum = 20000;  // candidates always examined
constexpr std::size_t kSearchLimit = 1000000;  // hard cap
const char* const kPinnedGamma2Example = "U1-U2+U3+O4+O3+U4+O2+O1-";
constexpr std::size_t kPinnedGamma2Index = 1;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool line(int index, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, title,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  return ok;
}

// Shared corpus: every code with up to 4 crossings (all layouts, roles and
// signs), then kRandomCorpusSize seeded random codes with 5..12 crossings.
std::vector<GaussCode> build_corpus() {
  std::vector<GaussCode> corpus;
  for (std::size_t n = 0; n <= 4; ++n) {
    vktest::for_each_code(n, [&](const GaussCode& code) { corpus.push_back(code); });
  }
  Rng rng(kCorpusSeed);
  for (std::size_t i = 0; i < kRandomCorpusSize; ++i) {
    corpus.push_back(random_code(5 + rng.below(8), rng.next()));
  }
  return corpus;
}

bool criterion1() {
  GaussCode trefoil = parse_gauss_code(kTrefoil);
  GaussCode vtrefoil = parse_gauss_code(kVirtualTrefoil);
  (void)gamma(trefoil);  // warm caches before timing
  auto start = Clock::now();
  IntPolynomial g_trefoil = gamma(trefoil);
  IntPolynomial g_vtrefoil = gamma(vtrefoil);
  double elapsed = ms_since(start);
  bool values_ok = g_trefoil == IntPolynomial::term(-3, 0) &&
                   g_vtrefoil == IntPolynomial::term(-2, 1);
  bool ok = values_ok && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "gamma(trefoil) = %s, gamma(virtual trefoil) = %s, %.3f ms (limit 1 ms)",
                g_trefoil.str().c_str(), g_vtrefoil.str().c_str(), elapsed);
  return line(1, "golden values", ok, detail);
}

bool criterion2(const std::vector<GaussCode>& corpus) {
  auto start = Clock::now();
  std::size_t mismatches = 0;
  for (const GaussCode& code : corpus) {
    if (!(gamma(code) == gamma_oracle(code))) ++mismatches;
    if (!(gamma2_bar(code) == gamma2_oracle(code))) ++mismatches;
  }
  double elapsed = ms_since(start);
  bool ok = mismatches == 0 && elapsed < 60000.0;
  char detail[160];
  std::snprintf(detail, sizeof detail, "%zu codes, %zu mismatches, %.1f s (limit 60 s)",
                corpus.size(), mismatches, elapsed / 1000.0);
  return line(2, "oracle equivalence", ok, detail);
}

bool criterion3(const std::vector<GaussCode>& corpus) {
  std::size_t violations = 0;
  for (const GaussCode& code : corpus) {
    if (gamma(code).coefficient(1) % 2 != 0) ++violations;
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "%zu codes, %zu violations", corpus.size(), violations);
  return line(3, "t-coefficient always even", violations == 0, detail);
}

bool criterion4(const std::vector<GaussCode>& corpus) {
  std::size_t violations = 0;
  for (const GaussCode& code : corpus) {
    if (evaluate_at_one(gamma(code)) != writhe(code)) ++violations;
  }
  // curated classical codes: gamma constant in t, oracle-confirmed
  bool classical_ok = true;
  for (const char* text : {kTrefoil, kFigureEight}) {
    GaussCode code = parse_gauss_code(text);
    IntPolynomial g = gamma(code);
    if (g.coefficient(1) != 0 || !(g == gamma_oracle(code))) classical_ok = false;
  }
  bool ok = violations == 0 && classical_ok;
  char detail[128];
  std::snprintf(detail, sizeof detail, "%zu codes, %zu violations; classical codes constant: %s",
                corpus.size(), violations, classical_ok ? "yes" : "no");
  return line(4, "gamma at t=1 is the writhe", ok, detail);
}

bool criterion5() {
  const std::set<MoveKind> r2r3{MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3};
  Rng rng(kCorpusSeed + 5);
  std::size_t violations = 0;
  for (int i = 0; i < 200; ++i) {
    GaussCode code = random_code(8, rng.next());
    IntPolynomial g = gamma(code);
    Mod2Polynomial g_bar = gamma_bar(code);
    Mod2Polynomial g2 = gamma2_bar(code);

    ScrambleResult scrambled = scramble(code, rng.next(), 100, r2r3);
    if (!(gamma(scrambled.code) == g) || !(gamma_bar(scrambled.code) == g_bar) ||
        !(gamma2_bar(scrambled.code) == g2)) {
      ++violations;
    }

    int sign = rng.sign();
    GaussCode kinked =
        r1_insert(code, rng.below(code.size() + 1), sign,
                  rng.coin() ? InsertOrder::OverFirst : InsertOrder::UnderFirst);
    if (!(gamma(kinked) - g == IntPolynomial::term(sign, 0)) ||
        !(gamma2_bar(kinked) == g2)) {
      ++violations;
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "200 codes, 100 r2/r3 moves each plus an r1 kink, %zu violations", violations);
  return line(5, "move invariance", violations == 0, detail);
}

bool criterion6() {
  Rng rng(kCorpusSeed + 6);
  std::size_t violations = 0;
  std::size_t switches = 0;
  for (int i = 0; i < 1000; ++i) {
    GaussCode code = random_code(1 + rng.below(10), rng.next());
    IntPolynomial g = gamma(code);
    Mod2Polynomial g_bar = gamma_bar(code);
    Mod2Polynomial g2 = gamma2_bar(code);
    for (const std::string& label : code.labels()) {
      ++switches;
      GaussCode switched = switch_crossing(code, label);
      IntPolynomial g_switched = gamma(switched);
      unsigned parity = chord_parity(code, label) == Parity::Odd ? 1 : 0;
      if (!(g - g_switched == IntPolynomial::term(2 * code.sign_of(label), parity))) {
        ++violations;
      }
      if (!(gamma_bar(switched) == g_bar)) ++violations;
      // degree-one switch law for gamma2_bar: even-parity switches preserve
      // it, odd-parity switches toggle the t^2 term
      Mod2Polynomial g2_expected = g2;
      if (parity == 1) g2_expected.toggle(2);
      if (!(gamma2_bar(switched) == g2_expected)) ++violations;
      if (!Mod2Polynomial::from(g + g_switched).is_zero()) ++violations;
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof detail, "1000 codes, %zu switches, %zu violations", switches,
                violations);
  return line(6, "finite-type checks", violations == 0, detail);
}

// Component counts depend only on where the chord endpoints sit, never on
// signs or roles, so sweeping every layout with every decoration up to 4
// crossings plus every *layout* at 5 crossings covers the structural space
// exhaustively; the random corpus varies the decorations at size 5 and up.
bool criterion7(const std::vector<GaussCode>& corpus) {
  std::size_t violations = 0;
  std::size_t checked = 0;
  auto check_code = [&](const GaussCode& code) {
    ++checked;
    std::vector<std::string> labels = code.labels();
    for (const std::string& label : labels) {
      if (component_count(smooth(code, {label})) != 2) ++violations;
    }
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        std::size_t want = interlaced(code, labels[a], labels[b]) ? 1 : 3;
        if (component_count(smooth(code, {labels[a], labels[b]})) != want) ++violations;
      }
    }
  };
  for (const GaussCode& code : corpus) check_code(code);
  for (const vktest::Layout& layout : vktest::chord_layouts(5)) {
    check_code(vktest::code_from_layout(layout, 0, 0));
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "%zu codes, %zu violations", checked, violations);
  return line(7, "component-count law", violations == 0, detail);
}

struct SearchOutcome {
  bool found = false;
  std::string first_code;
  std::size_t first_index = 0;
  std::size_t examined = 0;
  std::size_t t3_hits = 0;
  double elapsed_ms = 0;
  std::vector<std::string> gamma_2_plus_4t;  // codes with gamma = 2+4t and gamma2 = t^2
};

SearchOutcome run_search() {
  SearchOutcome outcome;
  Mod2Polynomial t_squared;
  t_squared.toggle(2);
  IntPolynomial two_plus_4t = IntPolynomial::term(2, 0) + IntPolynomial::term(4, 1);
  Rng rng(kSearchSeed);
  auto start = Clock::now();
  for (std::size_t i = 0; i < kSearchLimit; ++i) {
    if (i >= kSearchMinimum && outcome.found) break;
    GaussCode code = random_code(4 + rng.below(7), rng.next());  // 4..10 crossings
    ++outcome.examined;
    Mod2Polynomial g2 = gamma2_bar(code);
    if (g2.contains(3)) ++outcome.t3_hits;
    if (g2 == t_squared) {
      if (!outcome.found) {
        outcome.found = true;
        outcome.first_code = code.render();
        outcome.first_index = i;
      }
      if (gamma(code) == two_plus_4t) outcome.gamma_2_plus_4t.push_back(code.render());
    }
  }
  outcome.elapsed_ms = ms_since(start);
  return outcome;
}

bool criterion8(const SearchOutcome& outcome) {
  bool oracle_ok = false;
  bool snapshot_ok = false;
  if (outcome.found) {
    GaussCode code = parse_gauss_code(outcome.first_code);
    Mod2Polynomial t_squared;
    t_squared.toggle(2);
    oracle_ok = gamma2_oracle(code) == t_squared;
    snapshot_ok = std::string(kPinnedGamma2Example).empty()
                      ? false
                      : (outcome.first_code == kPinnedGamma2Example &&
                         outcome.first_index == kPinnedGamma2Index);
  }
  bool ok = outcome.found && oracle_ok && snapshot_ok && outcome.t3_hits == 0 &&
            outcome.elapsed_ms < 300000.0;
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "%zu candidates, first hit %s at index %zu (pinned: %s), oracle %s, "
                "t^3 hits %zu, %.1f s (limit 300 s)",
                outcome.examined, outcome.found ? outcome.first_code.c_str() : "none",
                outcome.first_index, snapshot_ok ? "match" : "MISMATCH",
                oracle_ok ? "agrees" : "disagrees", outcome.t3_hits,
                outcome.elapsed_ms / 1000.0);
  return line(8, "gamma2_bar realizes t^2", ok, detail);
}

bool criterion9(const SearchOutcome& outcome) {
  GaussCode code = parse_gauss_code(kMiyazawaValue);
  IntPolynomial expected = IntPolynomial::term(2, 0) + IntPolynomial::term(2, 1);
  IntPolynomial g = gamma(code);
  bool ok = g == expected && gamma_oracle(code) == expected;
  std::string detail = "stand-in gamma = " + g.str() + " (oracle-checked)";
  detail += "; gamma = 2 + 4t with gamma2_bar = t^2: ";
  if (outcome.gamma_2_plus_4t.empty()) {
    detail += "none logged";
  } else {
    detail += std::to_string(outcome.gamma_2_plus_4t.size()) +
              " logged, e.g. " + outcome.gamma_2_plus_4t.front();
  }
  return line(9, "figure-dependent values via stand-ins", ok, detail);
}

}  // namespace

int main() {
  std::vector<GaussCode> corpus = build_corpus();
  SearchOutcome outcome = run_search();
  bool all = true;
  all &= criterion1();
  all &= criterion2(corpus);
  all &= criterion3(corpus);
  all &= criterion4(corpus);
  all &= criterion5();
  all &= criterion6();
  all &= criterion7(corpus);
  all &= criterion8(outcome);
  all &= criterion9(outcome);
  std::printf("%s\n", all ? "acceptance: all 9 criteria passed"
                          : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
