#include "vk/surgery.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "vk/polynomial.hpp"

namespace vk {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

SmoothingResult smooth(const GaussCode& code, const std::vector<std::string>& labels) {
  const std::size_t length = code.size();

  // slot -> partner slot of the same smoothed crossing, kNone if surviving
  std::vector<std::size_t> partner(length, kNone);
  std::vector<std::string> smoothed;
  for (const std::string& label : labels) {
    auto [p, q] = code.positions_of(label);  // throws on unknown label
    if (partner[p] != kNone) continue;       // duplicate in input
    partner[p] = q;
    partner[q] = p;
    smoothed.push_back(label);
  }
  std::sort(smoothed.begin(), smoothed.end());

  SmoothingResult result;
  result.smoothed = std::move(smoothed);
  if (length == 0) {
    result.link.components.emplace_back();  // the unknot itself
    return result;
  }

  // Cycle of the successor map starting at `start`, collecting the surviving
  // passages met along the way.
  std::vector<bool> visited(length, false);
  auto trace = [&](std::size_t start) {
    std::vector<Passage> component;
    std::size_t arc = start;
    do {
      visited[arc] = true;
      std::size_t slot = (arc + 1) % length;
      if (partner[slot] == kNone) {
        component.push_back(code.at(slot));
        arc = slot;
      } else {
        arc = partner[slot];
      }
    } while (arc != start);
    result.link.components.push_back(std::move(component));
  };

  std::size_t lowest_smoothed = kNone;
  for (std::size_t slot = 0; slot < length; ++slot) {
    if (partner[slot] != kNone) {
      lowest_smoothed = slot;
      break;
    }
  }
  if (lowest_smoothed == kNone) {
    trace(length - 1);  // no surgery: one component, passages in original order
  } else {
    trace(lowest_smoothed);
    for (std::size_t arc = 0; arc < length; ++arc) {
      if (!visited[arc]) trace(arc);
    }
  }
  return result;
}

std::size_t component_count(const SmoothingResult& result) {
  return result.link.components.size();
}

std::int64_t linking_number(const SmoothingResult& result) {
  if (component_count(result) != 2) {
    throw DomainError("linking number needs exactly 2 components, got " +
                      std::to_string(component_count(result)));
  }
  // a crossing links the components iff its two passages lie in different ones
  std::map<std::string, std::pair<int, int>> spans;  // label -> (component, sign)
  std::int64_t linking = 0;
  for (int side = 0; side < 2; ++side) {
    for (const Passage& p : result.link.components[side]) {
      auto it = spans.find(p.label);
      if (it == spans.end()) {
        spans.emplace(p.label, std::make_pair(side, p.sign));
      } else if (it->second.first != side) {
        linking = checked_add(linking, it->second.second);
      }
    }
  }
  return linking;
}

int linking_mod2(const SmoothingResult& result) {
  std::int64_t l = linking_number(result);
  return static_cast<int>(((l % 2) + 2) % 2);
}

GaussCode knot_from_pair_smoothing(const GaussCode& code, const std::string& a,
                                   const std::string& b) {
  if (!interlaced(code, a, b)) {
    throw DomainError("crossings '" + a + "' and '" + b +
                      "' are not interlaced; smoothing the pair would not yield a knot");
  }
  SmoothingResult result = smooth(code, {a, b});
  return GaussCode(std::move(result.link.components.at(0)));
}

GaussCode switch_crossing(const GaussCode& code, const std::string& label) {
  auto [p, q] = code.positions_of(label);
  std::vector<Passage> passages = code.passages();
  for (std::size_t slot : {p, q}) {
    Passage& passage = passages[slot];
    passage.role = passage.role == Role::Over ? Role::Under : Role::Over;
    passage.sign = -passage.sign;
  }
  return GaussCode(std::move(passages));
}

}  // namespace vk
