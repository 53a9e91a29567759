#pragma once

// Oriented ("vertical") smoothing surgery on Gauss codes.
//
// The 2n passage slots of a code separate the knot circle into 2n arcs; arc a
// runs from slot a to slot a+1 (mod 2n).  Smoothing a crossing with slots p
// and q rewires the traversal: the arc entering p continues on the arc
// leaving q, and the arc entering q continues on the arc leaving p.  This is
// the orientation-preserving resolution, so surviving crossings keep their
// labels, roles and signs.  Components of the smoothed diagram are the cycles
// of the rewired arc successor map; a cycle that passes no surviving slot is
// an empty component (a free unknotted loop).

#include <cstdint>
#include <string>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

struct LinkDiagram {
  // Cyclic passage sequences, possibly empty.
  std::vector<std::vector<Passage>> components;
};

struct SmoothingResult {
  LinkDiagram link;
  std::vector<std::string> smoothed;  // labels removed, sorted
};

// Smooth every crossing in `labels` (treated as a set).  Component order is
// deterministic: the component containing the arc leaving the lowest smoothed
// slot comes first, the rest follow by smallest arc index.
SmoothingResult smooth(const GaussCode& code, const std::vector<std::string>& labels);

std::size_t component_count(const SmoothingResult& result);

// Sum of signs of surviving crossings with one passage in each component.
// Defined only for two-component results.
std::int64_t linking_number(const SmoothingResult& result);

// linking_number mod 2, in {0, 1}.
int linking_mod2(const SmoothingResult& result);

// Smooth an interlaced pair of crossings; the result is a single component
// and is returned as a Gauss code with the surviving passages in traced
// order.  Smoothing a non-interlaced pair would split the knot into three
// components, so that is rejected.
GaussCode knot_from_pair_smoothing(const GaussCode& code, const std::string& a,
                                   const std::string& b);

// Swap the over/under roles of the label's two passages and flip both signs.
GaussCode switch_crossing(const GaussCode& code, const std::string& label);

}  // namespace vk
