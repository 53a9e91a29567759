#include "vk/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vk {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

void validate(const std::vector<Passage>& passages) {
  if (passages.size() / 2 > kMaxCrossings) {
    throw ValidationError(ValidationError::Kind::TooLarge, "",
                          "code exceeds the supported bound of " +
                              std::to_string(kMaxCrossings) + " crossings");
  }
  std::map<std::string, std::vector<std::size_t>> occurrences;
  for (std::size_t i = 0; i < passages.size(); ++i) {
    const Passage& p = passages[i];
    if (p.sign != +1 && p.sign != -1) {
      throw ValidationError(ValidationError::Kind::Signs, p.label,
                            "sign of '" + p.label + "' must be +1 or -1");
    }
    if (p.label.empty() || !std::all_of(p.label.begin(), p.label.end(), is_label_char)) {
      throw ValidationError(ValidationError::Kind::LabelCount, p.label,
                            "label '" + p.label + "' is not alphanumeric");
    }
    occurrences[p.label].push_back(i);
  }
  for (const auto& [label, slots] : occurrences) {
    if (slots.size() != 2) {
      throw ValidationError(ValidationError::Kind::LabelCount, label,
                            "label '" + label + "' occurs " +
                                std::to_string(slots.size()) + " times, expected 2");
    }
    const Passage& a = passages[slots[0]];
    const Passage& b = passages[slots[1]];
    if (a.role == b.role) {
      const char* role = a.role == Role::Over ? "over" : "under";
      throw ValidationError(ValidationError::Kind::Roles, label,
                            "label '" + label + "' passes " + role + " twice");
    }
    if (a.sign != b.sign) {
      throw ValidationError(ValidationError::Kind::Signs, label,
                            "sign mismatch on label '" + label + "'");
    }
  }
}

}  // namespace

std::string Passage::token() const {
  std::string t;
  t.reserve(label.size() + 2);
  t += role == Role::Over ? 'O' : 'U';
  t += label;
  t += sign > 0 ? '+' : '-';
  return t;
}

GaussCode::GaussCode(std::vector<Passage> passages) : passages_(std::move(passages)) {
  validate(passages_);
}

GaussCode GaussCode::parse(std::string_view text) {
  std::vector<Passage> passages;
  std::size_t i = 0;
  bool expect_token = true;  // separators are only legal between tokens, one at a time
  while (i < text.size()) {
    char c = text[i];
    if (!expect_token && (c == ' ' || c == ',')) {
      ++i;
      expect_token = true;
      continue;
    }
    if (c != 'O' && c != 'U') {
      throw SyntaxError(std::string("expected 'O' or 'U', got '") + c + "'", i);
    }
    Passage p;
    p.role = c == 'O' ? Role::Over : Role::Under;
    ++i;
    std::size_t label_start = i;
    while (i < text.size() && is_label_char(text[i])) ++i;
    if (i == label_start) {
      throw SyntaxError("expected an alphanumeric label", i);
    }
    p.label.assign(text.substr(label_start, i - label_start));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
      throw SyntaxError("expected '+' or '-' after label '" + p.label + "'", i);
    }
    p.sign = text[i] == '+' ? +1 : -1;
    ++i;
    passages.push_back(std::move(p));
    expect_token = false;
  }
  if (expect_token && !passages.empty()) {
    throw SyntaxError("trailing separator", text.size() - 1);
  }
  return GaussCode(std::move(passages));
}

std::string GaussCode::render() const {
  std::string out;
  for (const Passage& p : passages_) out += p.token();
  return out;
}

std::vector<std::string> GaussCode::labels() const {
  std::vector<std::string> out;
  for (const Passage& p : passages_) {
    if (std::find(out.begin(), out.end(), p.label) == out.end()) out.push_back(p.label);
  }
  return out;
}

bool GaussCode::contains(const std::string& label) const {
  return std::any_of(passages_.begin(), passages_.end(),
                     [&](const Passage& p) { return p.label == label; });
}

std::pair<std::size_t, std::size_t> GaussCode::positions_of(const std::string& label) const {
  std::size_t first = passages_.size();
  for (std::size_t i = 0; i < passages_.size(); ++i) {
    if (passages_[i].label != label) continue;
    if (first == passages_.size()) {
      first = i;
    } else {
      return {first, i};
    }
  }
  throw DomainError("unknown label '" + label + "'");
}

int GaussCode::sign_of(const std::string& label) const {
  return passages_[positions_of(label).first].sign;
}

GaussCode GaussCode::rotated(std::size_t k) const {
  if (passages_.empty()) return *this;
  std::vector<Passage> out;
  out.reserve(passages_.size());
  for (std::size_t i = 0; i < passages_.size(); ++i) {
    out.push_back(passages_[(i + k) % passages_.size()]);
  }
  return GaussCode(std::move(out));
}

GaussCode parse_gauss_code(std::string_view text) { return GaussCode::parse(text); }

std::string render_gauss_code(const GaussCode& code) { return code.render(); }

bool cyclically_equal(const GaussCode& a, const GaussCode& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.rotated(k) == b) return true;
  }
  return false;
}

GaussCode smallest_rotation(const GaussCode& code) {
  if (code.empty()) return code;
  GaussCode best = code;
  std::string best_text = code.render();
  for (std::size_t k = 1; k < code.size(); ++k) {
    GaussCode candidate = code.rotated(k);
    std::string text = candidate.render();
    if (text < best_text) {
      best = std::move(candidate);
      best_text = std::move(text);
    }
  }
  return best;
}

std::vector<Chord> chords(const GaussCode& code) {
  std::vector<Chord> out;
  out.reserve(code.crossing_count());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Passage& p = code.at(i);
    auto it = index.find(p.label);
    if (it == index.end()) {
      index.emplace(p.label, out.size());
      out.push_back(Chord{p.label, i, i, p.sign});
    } else {
      out[it->second].second = i;
    }
  }
  return out;
}

bool chords_interlaced(const Chord& c, const Chord& d) {
  bool first_inside = c.first < d.first && d.first < c.second;
  bool second_inside = c.first < d.second && d.second < c.second;
  return first_inside != second_inside;
}

bool interlaced(const GaussCode& code, const std::string& c, const std::string& d) {
  if (c == d) throw DomainError("interlacement needs two distinct labels");
  auto [c1, c2] = code.positions_of(c);
  auto [d1, d2] = code.positions_of(d);
  return chords_interlaced(Chord{c, c1, c2, 0}, Chord{d, d1, d2, 0});
}

InterlacementGraph interlacement_graph(const GaussCode& code) {
  InterlacementGraph g;
  std::vector<Chord> ch = chords(code);
  g.vertices.reserve(ch.size());
  for (const Chord& c : ch) g.vertices.push_back(c.label);
  g.degrees.assign(ch.size(), 0);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      if (chords_interlaced(ch[i], ch[j])) {
        g.edges.emplace_back(i, j);
        ++g.degrees[i];
        ++g.degrees[j];
      }
    }
  }
  return g;
}

std::vector<std::size_t> interlacement_degrees(const std::vector<Chord>& chords) {
  std::vector<std::size_t> degrees(chords.size(), 0);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_interlaced(chords[i], chords[j])) {
        ++degrees[i];
        ++degrees[j];
      }
    }
  }
  return degrees;
}

bool InterlacementGraph::has_edge(const std::string& c, const std::string& d) const {
  auto index = [&](const std::string& label) {
    auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw DomainError("unknown label '" + label + "'");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::size_t i = index(c);
  std::size_t j = index(d);
  if (i > j) std::swap(i, j);
  return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
}

std::size_t InterlacementGraph::degree_of(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == label) return degrees[i];
  }
  throw DomainError("unknown label '" + label + "'");
}

Parity chord_parity(const GaussCode& code, const std::string& label) {
  auto [p1, p2] = code.positions_of(label);
  Chord target{label, p1, p2, 0};
  std::size_t degree = 0;
  for (const Chord& other : chords(code)) {
    if (other.label == label) continue;
    if (chords_interlaced(target, other)) ++degree;
  }
  return degree % 2 == 1 ? Parity::Odd : Parity::Even;
}

}  // namespace vk
