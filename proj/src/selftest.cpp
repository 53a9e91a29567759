#include "vk/selftest.hpp"

#include <functional>
#include <sstream>

#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/polynomial.hpp"
#include "vk/random.hpp"
#include "vk/surgery.hpp"

namespace vk {

namespace {

GaussCode flip_first_sign(const GaussCode& code) {
  std::vector<Passage> passages = code.passages();
  const std::string& label = passages.front().label;
  for (Passage& p : passages) {
    if (p.label == label) p.sign = -p.sign;
  }
  return GaussCode(std::move(passages));
}

// Runs `body` over the corpus, recording the first failure message returned.
PropertyResult check(const std::string& name, const std::vector<GaussCode>& corpus,
                     const std::function<std::string(const GaussCode&)>& body) {
  PropertyResult result;
  result.name = name;
  for (const GaussCode& code : corpus) {
    ++result.cases;
    std::string failure = body(code);
    if (!failure.empty()) {
      result.passed = false;
      result.detail = failure + " [code " + (code.empty() ? "(empty)" : code.render()) + "]";
      break;
    }
  }
  return result;
}

}  // namespace

bool SelfTestReport::all_passed() const {
  for (const PropertyResult& p : properties) {
    if (!p.passed) return false;
  }
  return true;
}

SelfTestReport run_selftest(const SelfTestOptions& options) {
  Rng rng(options.seed);
  std::vector<GaussCode> corpus;
  corpus.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    corpus.push_back(random_code(rng.below(options.max_n + 1), rng.next()));
  }

  const GaussCode* fault_target = nullptr;
  if (options.inject_fault) {
    for (const GaussCode& code : corpus) {
      if (!code.empty()) {
        fault_target = &code;
        break;
      }
    }
  }

  SelfTestReport report;

  report.properties.push_back(check(
      "oracle-bridge", corpus, [&](const GaussCode& code) -> std::string {
        GaussCode fast_input =
            (&code == fault_target) ? flip_first_sign(code) : code;
        if (!(gamma(fast_input) == gamma_oracle(code))) {
          return "gamma fast path disagrees with the smoothing oracle";
        }
        return {};
      }));

  report.properties.push_back(check(
      "gamma2-oracle", corpus, [](const GaussCode& code) -> std::string {
        if (!(gamma2_bar(code) == gamma2_oracle(code))) {
          return "gamma2_bar disagrees with the surgery oracle";
        }
        return {};
      }));

  report.properties.push_back(check(
      "t-coefficient-even", corpus, [](const GaussCode& code) -> std::string {
        std::int64_t b = gamma(code).coefficient(1);
        if (b % 2 != 0) {
          return "t-coefficient " + std::to_string(b) + " is odd";
        }
        return {};
      }));

  report.properties.push_back(check(
      "evaluate-at-one", corpus, [](const GaussCode& code) -> std::string {
        if (evaluate_at_one(gamma(code)) != writhe(code)) {
          return "gamma at t=1 differs from the writhe";
        }
        return {};
      }));

  report.properties.push_back(check(
      "crossing-switch", corpus, [](const GaussCode& code) -> std::string {
        IntPolynomial g = gamma(code);
        Mod2Polynomial g_bar = gamma_bar(code);
        for (const std::string& label : code.labels()) {
          GaussCode switched = switch_crossing(code, label);
          IntPolynomial g2 = gamma(switched);
          unsigned p = chord_parity(code, label) == Parity::Odd ? 1 : 0;
          IntPolynomial expected = IntPolynomial::term(2 * code.sign_of(label), p);
          if (!(g - g2 == expected)) {
            return "switching '" + label + "' did not change gamma by 2*sign*t^parity";
          }
          if (!(gamma_bar(switched) == g_bar)) {
            return "gamma_bar changed under switching '" + label + "'";
          }
          if (!Mod2Polynomial::from(g + g2).is_zero()) {
            return "gamma(K) + gamma(K') is not 0 mod 2 at '" + label + "'";
          }
        }
        return {};
      }));

  report.properties.push_back(check(
      "gamma2-degree-one", corpus, [](const GaussCode& code) -> std::string {
        // Degree-one switch law: switching an even-parity crossing preserves
        // gamma2_bar; switching an odd-parity crossing toggles its t^2 term.
        Mod2Polynomial g2 = gamma2_bar(code);
        std::vector<Chord> ch = chords(code);
        std::vector<std::size_t> degrees = interlacement_degrees(ch);
        for (std::size_t i = 0; i < ch.size(); ++i) {
          Mod2Polynomial expected = g2;
          if (degrees[i] % 2 == 1) expected.toggle(2);
          if (!(gamma2_bar(switch_crossing(code, ch[i].label)) == expected)) {
            return "gamma2_bar broke the switch law at '" + ch[i].label + "'";
          }
        }
        return {};
      }));

  report.properties.push_back(check(
      "component-count-law", corpus, [](const GaussCode& code) -> std::string {
        std::vector<std::string> labels = code.labels();
        for (const std::string& label : labels) {
          if (component_count(smooth(code, {label})) != 2) {
            return "single smoothing of '" + label + "' is not 2 components";
          }
        }
        for (std::size_t i = 0; i < labels.size(); ++i) {
          for (std::size_t j = i + 1; j < labels.size(); ++j) {
            std::size_t n = component_count(smooth(code, {labels[i], labels[j]}));
            std::size_t want = interlaced(code, labels[i], labels[j]) ? 1 : 3;
            if (n != want) {
              return "pair {" + labels[i] + "," + labels[j] + "} gave " + std::to_string(n) +
                     " components, expected " + std::to_string(want);
            }
          }
        }
        return {};
      }));

  report.properties.push_back(check(
      "gamma2-support", corpus, [](const GaussCode& code) -> std::string {
        Mod2Polynomial g2 = gamma2_bar(code);  // keep alive while iterating
        for (unsigned exponent : g2.exponents()) {
          if (exponent != 2) {
            return "gamma2_bar has support at t^" + std::to_string(exponent);
          }
        }
        return {};
      }));

  Rng move_rng(options.seed ^ 0x6d6f766573ULL);  // independent stream for moves
  report.properties.push_back(check(
      "move-invariance", corpus, [&](const GaussCode& code) -> std::string {
        IntPolynomial g = gamma(code);
        Mod2Polynomial g_bar = gamma_bar(code);
        Mod2Polynomial g2 = gamma2_bar(code);
        ScrambleResult scrambled =
            scramble(code, move_rng.next(), 20,
                     {MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3});
        if (!(gamma(scrambled.code) == g)) {
          return "gamma changed under an R2/R3 scramble";
        }
        if (!(gamma_bar(scrambled.code) == g_bar)) {
          return "gamma_bar changed under an R2/R3 scramble";
        }
        if (!(gamma2_bar(scrambled.code) == g2)) {
          return "gamma2_bar changed under an R2/R3 scramble";
        }
        int sign = move_rng.sign();
        GaussCode kinked = r1_insert(code, move_rng.below(code.size() + 1), sign,
                                     move_rng.coin() ? InsertOrder::OverFirst
                                                     : InsertOrder::UnderFirst);
        if (!(gamma(kinked) - g == IntPolynomial::term(sign, 0))) {
          return "an R1 kink did not shift gamma by sign*t^0";
        }
        if (!(gamma2_bar(kinked) == g2)) {
          return "gamma2_bar changed under an R1 kink";
        }
        return {};
      }));

  return report;
}

std::string render_selftest_text(const SelfTestReport& report) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const PropertyResult& p : report.properties) {
    if (p.passed) {
      out << "PASS " << p.name << " (" << p.cases << " cases)\n";
    } else {
      ++failed;
      out << "FAIL " << p.name << ": " << p.detail << "\n";
    }
  }
  if (failed == 0) {
    out << "all " << report.properties.size() << " properties passed\n";
  } else {
    out << failed << " of " << report.properties.size() << " properties failed\n";
  }
  return out.str();
}

}  // namespace vk
