#include "vk/report.hpp"

#include <fstream>
#include <sstream>

namespace vk {

namespace {

unsigned exponent_from_string(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad exponent key '" + text + "'");
  }
  if (used != text.size()) throw DomainError("bad exponent key '" + text + "'");
  return static_cast<unsigned>(value);
}

}  // namespace

InvariantReport build_report(const GaussCode& code) {
  InvariantReport report;
  report.code = code.render();
  report.writhe = writhe(code);
  report.gamma = gamma(code);
  report.gamma_bar = gamma_bar(code);
  report.gamma2_bar = gamma2_bar(code);
  for (const Chord& chord : chords(code)) {
    report.parities[chord.label] = chord_parity(code, chord.label);
  }
  report.pair_count = opposite_parity_pairs(code).size();

  if (evaluate_at_one(report.gamma) != report.writhe) {
    throw Error("internal inconsistency: gamma at t=1 differs from writhe");
  }
  if (!(Mod2Polynomial::from(report.gamma) == report.gamma_bar)) {
    throw Error("internal inconsistency: gamma_bar is not gamma mod 2");
  }
  return report;
}

nlohmann::json to_json(const IntPolynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [exponent, coefficient] : p.coefficients()) {
    j[std::to_string(exponent)] = coefficient;
  }
  return j;
}

nlohmann::json to_json(const Mod2Polynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (unsigned exponent : p.exponents()) j.push_back(exponent);
  return j;
}

nlohmann::json to_json(const InvariantReport& report) {
  nlohmann::json parities = nlohmann::json::object();
  for (const auto& [label, parity] : report.parities) {
    parities[label] = parity == Parity::Odd ? "odd" : "even";
  }
  return nlohmann::json{{"code", report.code},
                        {"writhe", report.writhe},
                        {"gamma", to_json(report.gamma)},
                        {"gamma_bar", to_json(report.gamma_bar)},
                        {"gamma2_bar", to_json(report.gamma2_bar)},
                        {"parities", parities},
                        {"pair_count", report.pair_count}};
}

nlohmann::json to_json(const LinkDiagram& link) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& component : link.components) {
    nlohmann::json tokens = nlohmann::json::array();
    for (const Passage& p : component) tokens.push_back(p.token());
    components.push_back(std::move(tokens));
  }
  return nlohmann::json{{"components", std::move(components)}};
}

nlohmann::json to_json(const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Insert:
      return {{"kind", "r1-insert"},
              {"gap", site.gap1},
              {"sign", site.sign},
              {"order", site.order == InsertOrder::OverFirst ? "over-first" : "under-first"}};
    case MoveKind::R1Delete:
      return {{"kind", "r1-delete"}, {"label", site.labels.at(0)}};
    case MoveKind::R2Insert:
      return {{"kind", "r2-insert"},
              {"gap1", site.gap1},
              {"gap2", site.gap2},
              {"sign", site.sign},
              {"variant", site.variant == R2Variant::Interleaved ? "interleaved" : "nested"}};
    case MoveKind::R2Delete:
      return {{"kind", "r2-delete"}, {"labels", {site.labels.at(0), site.labels.at(1)}}};
    case MoveKind::R3:
      return {{"kind", "r3"},
              {"labels", {site.labels.at(0), site.labels.at(1), site.labels.at(2)}},
              {"positions", {site.positions[0], site.positions[1], site.positions[2]}}};
  }
  throw DomainError("unknown move kind");
}

nlohmann::json to_json(const std::vector<MoveSite>& script) {
  nlohmann::json j = nlohmann::json::array();
  for (const MoveSite& site : script) j.push_back(to_json(site));
  return j;
}

nlohmann::json smoothing_json(const SmoothingResult& result) {
  nlohmann::json j = to_json(result.link);
  j["smoothed"] = result.smoothed;
  j["component_count"] = component_count(result);
  if (component_count(result) == 2) {
    j["linking"] = linking_number(result);
    j["linking_mod2"] = linking_mod2(result);
  }
  return j;
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("integer polynomial JSON must be an object");
  IntPolynomial p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) {
      throw DomainError("coefficient for exponent '" + key + "' is not an integer");
    }
    p.add_term(value.get<std::int64_t>(), exponent_from_string(key));
  }
  return p;
}

Mod2Polynomial mod2_polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("mod-2 polynomial JSON must be an array");
  Mod2Polynomial p;
  for (const auto& value : j) {
    if (!value.is_number_unsigned() && !value.is_number_integer()) {
      throw DomainError("mod-2 exponent is not an integer");
    }
    unsigned exponent = value.get<unsigned>();
    if (p.contains(exponent)) throw DomainError("duplicate mod-2 exponent");
    p.toggle(exponent);
  }
  return p;
}

InvariantReport report_from_json(const nlohmann::json& j) {
  InvariantReport report;
  report.code = j.at("code").get<std::string>();
  report.writhe = j.at("writhe").get<std::int64_t>();
  report.gamma = int_polynomial_from_json(j.at("gamma"));
  report.gamma_bar = mod2_polynomial_from_json(j.at("gamma_bar"));
  report.gamma2_bar = mod2_polynomial_from_json(j.at("gamma2_bar"));
  for (const auto& [label, parity] : j.at("parities").items()) {
    std::string text = parity.get<std::string>();
    if (text != "even" && text != "odd") throw DomainError("parity must be 'even' or 'odd'");
    report.parities[label] = text == "odd" ? Parity::Odd : Parity::Even;
  }
  report.pair_count = j.at("pair_count").get<std::size_t>();
  return report;
}

MoveSite move_site_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw DomainError("move site must be an object with a 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  MoveSite site;
  auto read_sign = [&j]() {
    int sign = j.at("sign").get<int>();
    if (sign != 1 && sign != -1) throw DomainError("sign must be 1 or -1");
    return sign;
  };
  if (kind == "r1-insert") {
    site.kind = MoveKind::R1Insert;
    site.gap1 = j.at("gap").get<std::size_t>();
    site.sign = read_sign();
    const std::string order = j.at("order").get<std::string>();
    if (order == "over-first") {
      site.order = InsertOrder::OverFirst;
    } else if (order == "under-first") {
      site.order = InsertOrder::UnderFirst;
    } else {
      throw DomainError("order must be 'over-first' or 'under-first'");
    }
  } else if (kind == "r1-delete") {
    site.kind = MoveKind::R1Delete;
    site.labels = {j.at("label").get<std::string>()};
  } else if (kind == "r2-insert") {
    site.kind = MoveKind::R2Insert;
    site.gap1 = j.at("gap1").get<std::size_t>();
    site.gap2 = j.at("gap2").get<std::size_t>();
    site.sign = read_sign();
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "interleaved") {
      site.variant = R2Variant::Interleaved;
    } else if (variant == "nested") {
      site.variant = R2Variant::Nested;
    } else {
      throw DomainError("variant must be 'interleaved' or 'nested'");
    }
  } else if (kind == "r2-delete") {
    site.kind = MoveKind::R2Delete;
    site.labels = j.at("labels").get<std::vector<std::string>>();
    if (site.labels.size() != 2) throw DomainError("r2-delete needs exactly two labels");
  } else if (kind == "r3") {
    site.kind = MoveKind::R3;
    site.labels = j.at("labels").get<std::vector<std::string>>();
    if (site.labels.size() != 3) throw DomainError("r3 needs exactly three labels");
    auto positions = j.at("positions").get<std::vector<std::size_t>>();
    if (positions.size() != 3) throw DomainError("r3 needs exactly three positions");
    site.positions = {positions[0], positions[1], positions[2]};
  } else {
    throw DomainError("unknown move kind '" + kind + "'");
  }
  return site;
}

std::vector<MoveSite> move_script_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("move script must be a JSON array");
  std::vector<MoveSite> script;
  script.reserve(j.size());
  for (const auto& entry : j) script.push_back(move_site_from_json(entry));
  return script;
}

std::string render_report_text(const InvariantReport& report) {
  std::ostringstream out;
  out << "code:        " << (report.code.empty() ? "(empty)" : report.code) << "\n";
  out << "crossings:   " << report.parities.size() << "\n";
  out << "writhe:      " << report.writhe << "\n";
  out << "gamma:       " << report.gamma.str() << "\n";
  out << "gamma_bar:   " << report.gamma_bar.str() << "\n";
  out << "gamma2_bar:  " << report.gamma2_bar.str() << "\n";
  out << "parities:    ";
  if (report.parities.empty()) {
    out << "(none)";
  } else {
    bool first = true;
    for (const auto& [label, parity] : report.parities) {
      if (!first) out << " ";
      out << label << ":" << (parity == Parity::Odd ? "odd" : "even");
      first = false;
    }
  }
  out << "\n";
  out << "odd pairs:   " << report.pair_count << "\n";
  return out.str();
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog file '" + path + "'");
  std::vector<CatalogEntry> entries;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw DomainError("catalog line " + std::to_string(line_number) +
                        ": expected name<TAB>code[<TAB>expected-json]");
    }
    CatalogEntry entry;
    entry.name = fields[0];
    entry.code = fields[1];
    if (fields.size() == 3 && !fields[2].empty()) {
      nlohmann::json expected = nlohmann::json::parse(fields[2], nullptr, false);
      if (expected.is_discarded()) {
        throw DomainError("catalog line " + std::to_string(line_number) +
                          ": expected-json does not parse");
      }
      entry.expected = std::move(expected);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CatalogCheck> verify_catalog(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogCheck> checks;
  checks.reserve(entries.size());
  for (const CatalogEntry& entry : entries) {
    CatalogCheck check;
    check.name = entry.name;
    try {
      GaussCode code = parse_gauss_code(entry.code);
      InvariantReport report = build_report(code);
      std::vector<std::string> problems;
      if (!(gamma_oracle(code) == report.gamma)) {
        problems.push_back("gamma oracle disagrees with fast path");
      }
      if (!(gamma2_oracle(code) == report.gamma2_bar)) {
        problems.push_back("gamma2 oracle disagrees with fast path");
      }
      if (entry.expected) {
        const nlohmann::json& expected = *entry.expected;
        if (expected.contains("writhe") &&
            expected.at("writhe").get<std::int64_t>() != report.writhe) {
          problems.push_back("writhe: expected " + expected.at("writhe").dump() + ", got " +
                             std::to_string(report.writhe));
        }
        if (expected.contains("gamma") &&
            !(int_polynomial_from_json(expected.at("gamma")) == report.gamma)) {
          problems.push_back("gamma: expected " + expected.at("gamma").dump() + ", got " +
                             to_json(report.gamma).dump());
        }
        if (expected.contains("gamma_bar") &&
            !(mod2_polynomial_from_json(expected.at("gamma_bar")) == report.gamma_bar)) {
          problems.push_back("gamma_bar: expected " + expected.at("gamma_bar").dump() +
                             ", got " + to_json(report.gamma_bar).dump());
        }
        if (expected.contains("gamma2_bar") &&
            !(mod2_polynomial_from_json(expected.at("gamma2_bar")) == report.gamma2_bar)) {
          problems.push_back("gamma2_bar: expected " + expected.at("gamma2_bar").dump() +
                             ", got " + to_json(report.gamma2_bar).dump());
        }
      }
      check.ok = problems.empty();
      if (!check.ok) {
        std::ostringstream detail;
        for (std::size_t i = 0; i < problems.size(); ++i) {
          if (i) detail << "; ";
          detail << problems[i];
        }
        check.detail = detail.str();
      }
    } catch (const Error& error) {
      check.ok = false;
      check.detail = error.what();
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace vk
