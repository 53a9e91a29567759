#include "vk/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vk/random.hpp"

namespace vk {

namespace {

void check_gap(const GaussCode& code, std::size_t gap) {
  if (gap > code.size()) {
    throw DomainError("gap " + std::to_string(gap) + " out of range 0.." +
                      std::to_string(code.size()));
  }
}

const Passage& cyclic_at(const GaussCode& code, std::size_t i) {
  return code.at(i % code.size());
}

bool is_passage(const Passage& p, Role role, const std::string& label) {
  return p.role == role && p.label == label;
}

}  // namespace

std::string fresh_label(const GaussCode& code) {
  std::set<std::string> used;
  for (const Passage& p : code.passages()) used.insert(p.label);
  for (unsigned k = 1;; ++k) {
    std::string candidate = std::to_string(k);
    if (used.find(candidate) == used.end()) return candidate;
  }
}

GaussCode r1_insert(const GaussCode& code, std::size_t gap, int sign, InsertOrder order) {
  check_gap(code, gap);
  const std::string label = fresh_label(code);
  Passage over{label, Role::Over, sign};
  Passage under{label, Role::Under, sign};
  std::vector<Passage> passages = code.passages();
  auto at = passages.begin() + static_cast<std::ptrdiff_t>(gap);
  if (order == InsertOrder::OverFirst) {
    passages.insert(at, {over, under});
  } else {
    passages.insert(at, {under, over});
  }
  return GaussCode(std::move(passages));
}

GaussCode r1_delete(const GaussCode& code, const std::string& label) {
  auto [p, q] = code.positions_of(label);
  const std::size_t length = code.size();
  bool adjacent = (p + 1) % length == q || (q + 1) % length == p;
  if (!adjacent) {
    throw DomainError("passages of '" + label + "' are not cyclically adjacent");
  }
  std::vector<Passage> passages;
  passages.reserve(length - 2);
  for (std::size_t i = 0; i < length; ++i) {
    if (i != p && i != q) passages.push_back(code.at(i));
  }
  return GaussCode(std::move(passages));
}

GaussCode r2_insert(const GaussCode& code, std::size_t gap1, std::size_t gap2,
                    R2Variant variant, int sign) {
  check_gap(code, gap1);
  check_gap(code, gap2);
  const std::string a = fresh_label(code);
  std::string b = a;
  // second fresh label, distinct from the first
  for (unsigned k = 1; b == a; ++k) {
    std::string candidate = std::to_string(k);
    if (candidate != a && !code.contains(candidate)) b = candidate;
  }
  std::vector<Passage> over_pair{{a, Role::Over, sign}, {b, Role::Over, -sign}};
  std::vector<Passage> under_pair;
  if (variant == R2Variant::Interleaved) {
    under_pair = {{a, Role::Under, sign}, {b, Role::Under, -sign}};
  } else {
    under_pair = {{b, Role::Under, -sign}, {a, Role::Under, sign}};
  }
  std::vector<Passage> passages;
  passages.reserve(code.size() + 4);
  for (std::size_t boundary = 0; boundary <= code.size(); ++boundary) {
    if (boundary == gap1) passages.insert(passages.end(), over_pair.begin(), over_pair.end());
    if (boundary == gap2) passages.insert(passages.end(), under_pair.begin(), under_pair.end());
    if (boundary < code.size()) passages.push_back(code.at(boundary));
  }
  return GaussCode(std::move(passages));
}

namespace {

// R2 pattern for the ordered labels (x, y): over passages adjacent as
// (Ox, Oy) and under passages adjacent as (Ux, Uy) or (Uy, Ux).
bool r2_pattern(const GaussCode& code, const std::string& x, const std::string& y) {
  const std::size_t length = code.size();
  bool overs = false, unders = false;
  for (std::size_t i = 0; i < length; ++i) {
    const Passage& p = code.at(i);
    const Passage& next = cyclic_at(code, i + 1);
    if (is_passage(p, Role::Over, x) && is_passage(next, Role::Over, y)) overs = true;
    if (is_passage(p, Role::Under, x) && is_passage(next, Role::Under, y)) unders = true;
    if (is_passage(p, Role::Under, y) && is_passage(next, Role::Under, x)) unders = true;
  }
  return overs && unders;
}

}  // namespace

GaussCode r2_delete(const GaussCode& code, const std::string& a, const std::string& b) {
  if (a == b) throw DomainError("R2 deletion needs two distinct labels");
  if (code.sign_of(a) != -code.sign_of(b)) {
    throw DomainError("R2 pattern absent: '" + a + "' and '" + b +
                      "' do not have opposite signs");
  }
  if (!r2_pattern(code, a, b) && !r2_pattern(code, b, a)) {
    throw DomainError("R2 pattern absent on labels '" + a + "', '" + b + "'");
  }
  std::vector<Passage> passages;
  passages.reserve(code.size() - 4);
  for (const Passage& p : code.passages()) {
    if (p.label != a && p.label != b) passages.push_back(p);
  }
  return GaussCode(std::move(passages));
}

std::vector<std::string> r1_delete_candidates(const GaussCode& code) {
  const std::size_t length = code.size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < length; ++i) {
    const Passage& p = code.at(i);
    if (cyclic_at(code, i + 1).label == p.label &&
        std::find(out.begin(), out.end(), p.label) == out.end()) {
      out.push_back(p.label);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> r2_delete_candidates(const GaussCode& code) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::size_t length = code.size();
  for (std::size_t i = 0; i < length; ++i) {
    const Passage& p = code.at(i);
    const Passage& next = cyclic_at(code, i + 1);
    if (p.role != Role::Over || next.role != Role::Over) continue;
    if (p.label == next.label) continue;
    if (p.sign != -next.sign) continue;
    if (r2_pattern(code, p.label, next.label)) {
      auto pair = p.label < next.label ? std::make_pair(p.label, next.label)
                                       : std::make_pair(next.label, p.label);
      if (std::find(out.begin(), out.end(), pair) == out.end()) out.push_back(pair);
    }
  }
  return out;
}

std::vector<MoveSite> r3_sites(const GaussCode& code) {
  std::vector<MoveSite> sites;
  const std::size_t length = code.size();
  if (length < 6) return sites;
  // Each label's under-passage sits at exactly one slot, so once the over
  // pair (Ox Oy) is fixed the other two pairs are forced; no search needed.
  std::map<std::string, std::size_t> under_slot;
  for (std::size_t i = 0; i < length; ++i) {
    if (code.at(i).role == Role::Under) under_slot[code.at(i).label] = i;
  }
  for (std::size_t i = 0; i < length; ++i) {
    const Passage& ox = code.at(i);
    const Passage& oy = cyclic_at(code, i + 1);
    if (ox.role != Role::Over || oy.role != Role::Over) continue;
    if (ox.label == oy.label || ox.sign != oy.sign) continue;
    const std::string& x = ox.label;
    const std::string& y = oy.label;
    std::size_t j = under_slot.at(x);
    const Passage& oz = cyclic_at(code, j + 1);
    if (oz.role != Role::Over) continue;
    const std::string& z = oz.label;
    if (z == x || z == y || oz.sign != ox.sign) continue;
    std::size_t k = under_slot.at(y);
    if (!is_passage(cyclic_at(code, k + 1), Role::Under, z)) continue;
    MoveSite site;
    site.kind = MoveKind::R3;
    site.labels = {x, y, z};
    site.positions = {i, j, k};
    sites.push_back(std::move(site));
  }
  return sites;
}

GaussCode r3_apply(const GaussCode& code, const MoveSite& site) {
  if (site.kind != MoveKind::R3 || site.labels.size() != 3) {
    throw DomainError("not an R3 site");
  }
  const std::size_t length = code.size();
  const std::string& x = site.labels[0];
  const std::string& y = site.labels[1];
  const std::string& z = site.labels[2];
  // each pair must hold the expected two passages, in either order
  const std::array<std::pair<Passage, Passage>, 3> expected{{
      {{x, Role::Over, 0}, {y, Role::Over, 0}},
      {{x, Role::Under, 0}, {z, Role::Over, 0}},
      {{y, Role::Under, 0}, {z, Role::Under, 0}},
  }};
  std::vector<Passage> passages = code.passages();
  for (std::size_t pair = 0; pair < 3; ++pair) {
    std::size_t first = site.positions[pair];
    if (first >= length) throw DomainError("stale R3 site: position out of range");
    std::size_t second = (first + 1) % length;
    const Passage& p = passages[first];
    const Passage& q = passages[second];
    auto matches = [&](const Passage& got, const Passage& want) {
      return got.label == want.label && got.role == want.role;
    };
    bool forward = matches(p, expected[pair].first) && matches(q, expected[pair].second);
    bool reversed = matches(p, expected[pair].second) && matches(q, expected[pair].first);
    if (!forward && !reversed) throw DomainError("stale R3 site: pattern no longer present");
    std::swap(passages[first], passages[second]);
  }
  return GaussCode(std::move(passages));
}

GaussCode apply_move(const GaussCode& code, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Insert:
      return r1_insert(code, site.gap1, site.sign, site.order);
    case MoveKind::R1Delete:
      if (site.labels.size() != 1) throw DomainError("R1 deletion needs one label");
      return r1_delete(code, site.labels[0]);
    case MoveKind::R2Insert:
      return r2_insert(code, site.gap1, site.gap2, site.variant, site.sign);
    case MoveKind::R2Delete:
      if (site.labels.size() != 2) throw DomainError("R2 deletion needs two labels");
      return r2_delete(code, site.labels[0], site.labels[1]);
    case MoveKind::R3:
      return r3_apply(code, site);
  }
  throw DomainError("unknown move kind");
}

GaussCode random_code(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> free_slots(2 * n);
  for (std::size_t i = 0; i < free_slots.size(); ++i) free_slots[i] = i;
  std::vector<Passage> passages(2 * n);
  unsigned label = 1;
  while (!free_slots.empty()) {
    std::size_t first = free_slots.front();
    std::size_t pick = 1 + rng.below(free_slots.size() - 1);
    std::size_t second = free_slots[pick];
    free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(pick));
    free_slots.erase(free_slots.begin());
    int sign = rng.sign();
    Role first_role = rng.coin() ? Role::Over : Role::Under;
    std::string name = std::to_string(label++);
    passages[first] = Passage{name, first_role, sign};
    passages[second] = Passage{name, first_role == Role::Over ? Role::Under : Role::Over, sign};
  }
  return GaussCode(std::move(passages));
}

ScrambleResult scramble(const GaussCode& code, std::uint64_t seed, std::size_t steps,
                        const std::set<MoveKind>& allowed) {
  Rng rng(seed);
  ScrambleResult result{code, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    GaussCode& current = result.code;
    std::vector<std::string> r1_candidates;
    std::vector<std::pair<std::string, std::string>> r2_candidates;
    std::vector<MoveSite> r3_candidates;

    std::vector<MoveKind> applicable;
    for (MoveKind kind : allowed) {
      switch (kind) {
        case MoveKind::R1Insert:
        case MoveKind::R2Insert:
          applicable.push_back(kind);
          break;
        case MoveKind::R1Delete:
          r1_candidates = r1_delete_candidates(current);
          if (!r1_candidates.empty()) applicable.push_back(kind);
          break;
        case MoveKind::R2Delete:
          r2_candidates = r2_delete_candidates(current);
          if (!r2_candidates.empty()) applicable.push_back(kind);
          break;
        case MoveKind::R3:
          r3_candidates = r3_sites(current);
          if (!r3_candidates.empty()) applicable.push_back(kind);
          break;
      }
    }
    if (applicable.empty()) break;

    MoveSite site;
    site.kind = applicable[rng.below(applicable.size())];
    switch (site.kind) {
      case MoveKind::R1Insert:
        site.gap1 = rng.below(current.size() + 1);
        site.sign = rng.sign();
        site.order = rng.coin() ? InsertOrder::OverFirst : InsertOrder::UnderFirst;
        break;
      case MoveKind::R1Delete:
        site.labels = {r1_candidates[rng.below(r1_candidates.size())]};
        break;
      case MoveKind::R2Insert:
        site.gap1 = rng.below(current.size() + 1);
        site.gap2 = rng.below(current.size() + 1);
        site.variant = rng.coin() ? R2Variant::Interleaved : R2Variant::Nested;
        site.sign = rng.sign();
        break;
      case MoveKind::R2Delete: {
        auto [a, b] = r2_candidates[rng.below(r2_candidates.size())];
        site.labels = {a, b};
        break;
      }
      case MoveKind::R3:
        site = r3_candidates[rng.below(r3_candidates.size())];
        break;
    }
    result.code = apply_move(current, site);
    result.applied.push_back(std::move(site));
  }
  return result;
}

}  // namespace vk
