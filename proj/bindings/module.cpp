// Python bindings: thin wrappers over the C++ core, working on Gauss-code
// text.  Containers cross the boundary as plain Python dicts/lists in the
// same shapes the CLI's JSON output uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "vk/errors.hpp"
#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/moves.hpp"
#include "vk/polynomial.hpp"
#include "vk/report.hpp"
#include "vk/selftest.hpp"
#include "vk/surgery.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list list;
      for (const auto& item : j) list.append(json_to_py(item));
      return list;
    }
    case nlohmann::json::value_t::object: {
      py::dict dict;
      for (const auto& [key, value] : j.items()) dict[py::str(key)] = json_to_py(value);
      return dict;
    }
    default:
      return py::none();
  }
}

py::dict poly_to_py(const vk::IntPolynomial& p) {
  py::dict out;
  for (const auto& [exponent, coefficient] : p.coefficients()) {
    out[py::int_(exponent)] = py::int_(coefficient);
  }
  return out;
}

py::list mod2_to_py(const vk::Mod2Polynomial& p) {
  py::list out;
  for (unsigned exponent : p.exponents()) out.append(py::int_(exponent));
  return out;
}

std::set<vk::MoveKind> allowed_from_names(const std::vector<std::string>& names) {
  std::set<vk::MoveKind> allowed;
  for (const std::string& name : names) {
    if (name == "r1") {
      allowed.insert(vk::MoveKind::R1Insert);
      allowed.insert(vk::MoveKind::R1Delete);
    } else if (name == "r2") {
      allowed.insert(vk::MoveKind::R2Insert);
      allowed.insert(vk::MoveKind::R2Delete);
    } else if (name == "r3") {
      allowed.insert(vk::MoveKind::R3);
    } else {
      throw vk::DomainError("unknown move class '" + name + "' (use r1, r2, r3)");
    }
  }
  return allowed;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linking-number invariants of virtual knots from signed Gauss codes";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const vk::OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const vk::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "parse",
      [](const std::string& text) { return vk::parse_gauss_code(text).render(); },
      py::arg("code"), "Validate a signed Gauss code and return its canonical rendering.");

  m.def(
      "writhe", [](const std::string& text) { return vk::writhe(vk::parse_gauss_code(text)); },
      py::arg("code"), "Sum of crossing signs.");

  m.def(
      "gamma",
      [](const std::string& text) { return poly_to_py(vk::gamma(vk::parse_gauss_code(text))); },
      py::arg("code"), "gamma as a dict mapping exponent of t to coefficient.");

  m.def(
      "gamma_oracle",
      [](const std::string& text) {
        return poly_to_py(vk::gamma_oracle(vk::parse_gauss_code(text)));
      },
      py::arg("code"), "gamma recomputed by literal smoothing surgery.");

  m.def(
      "gamma_bar",
      [](const std::string& text) {
        return mod2_to_py(vk::gamma_bar(vk::parse_gauss_code(text)));
      },
      py::arg("code"), "gamma mod 2, as the sorted list of exponents present.");

  m.def(
      "gamma2_bar",
      [](const std::string& text) {
        return mod2_to_py(vk::gamma2_bar(vk::parse_gauss_code(text)));
      },
      py::arg("code"), "Second-order invariant, as the sorted list of exponents present.");

  m.def(
      "gamma2_oracle",
      [](const std::string& text) {
        return mod2_to_py(vk::gamma2_oracle(vk::parse_gauss_code(text)));
      },
      py::arg("code"), "gamma2_bar recomputed entirely through surgery.");

  m.def(
      "parities",
      [](const std::string& text) {
        vk::GaussCode code = vk::parse_gauss_code(text);
        py::dict out;
        for (const vk::Chord& chord : vk::chords(code)) {
          out[py::str(chord.label)] =
              vk::chord_parity(code, chord.label) == vk::Parity::Odd ? "odd" : "even";
        }
        return out;
      },
      py::arg("code"), "Per-crossing chord parity, 'even' or 'odd'.");

  m.def(
      "opposite_parity_pairs",
      [](const std::string& text) {
        return vk::opposite_parity_pairs(vk::parse_gauss_code(text));
      },
      py::arg("code"), "Interlaced label pairs of opposite parity, lexicographic.");

  m.def(
      "report",
      [](const std::string& text) {
        return json_to_py(vk::to_json(vk::build_report(vk::parse_gauss_code(text))));
      },
      py::arg("code"), "Full invariant report in the CLI's JSON shape.");

  m.def(
      "smooth",
      [](const std::string& text, const std::vector<std::string>& labels) {
        return json_to_py(vk::smoothing_json(vk::smooth(vk::parse_gauss_code(text), labels)));
      },
      py::arg("code"), py::arg("labels"),
      "Smooth the given crossings; includes linking data for 2-component results.");

  m.def(
      "switch_crossing",
      [](const std::string& text, const std::string& label) {
        return vk::switch_crossing(vk::parse_gauss_code(text), label).render();
      },
      py::arg("code"), py::arg("label"), "Switch one crossing (roles swapped, sign flipped).");

  m.def(
      "knot_from_pair_smoothing",
      [](const std::string& text, const std::string& a, const std::string& b) {
        return vk::knot_from_pair_smoothing(vk::parse_gauss_code(text), a, b).render();
      },
      py::arg("code"), py::arg("a"), py::arg("b"),
      "Smooth an interlaced pair and return the resulting knot's code.");

  m.def(
      "random_code",
      [](std::size_t n, std::uint64_t seed) { return vk::random_code(n, seed).render(); },
      py::arg("n"), py::arg("seed"), "Seeded uniform random code with n crossings.");

  m.def(
      "scramble",
      [](const std::string& text, std::uint64_t seed, std::size_t steps,
         const std::vector<std::string>& allowed) {
        vk::ScrambleResult result = vk::scramble(vk::parse_gauss_code(text), seed, steps,
                                                 allowed_from_names(allowed));
        py::dict out;
        out["result"] = result.code.render();
        out["applied"] = json_to_py(vk::to_json(result.applied));
        return out;
      },
      py::arg("code"), py::arg("seed"), py::arg("steps"),
      py::arg("allowed") = std::vector<std::string>{"r2", "r3"},
      "Apply random Reidemeister moves; returns the result and the move script.");

  m.def(
      "selftest",
      [](std::size_t max_n, std::size_t count, std::uint64_t seed) {
        vk::SelfTestOptions options;
        options.max_n = max_n;
        options.count = count;
        options.seed = seed;
        vk::SelfTestReport report = vk::run_selftest(options);
        py::list properties;
        for (const vk::PropertyResult& p : report.properties) {
          py::dict entry;
          entry["name"] = p.name;
          entry["cases"] = p.cases;
          entry["passed"] = p.passed;
          entry["detail"] = p.detail;
          properties.append(entry);
        }
        py::dict out;
        out["passed"] = report.all_passed();
        out["properties"] = properties;
        return out;
      },
      py::arg("max_n") = 10, py::arg("count") = 300, py::arg("seed") = 1729,
      "Run the randomized property suite and return the results.");
}
