#pragma once

// Exhaustive enumeration helpers shared by the unit and acceptance suites.
//
// A code with n crossings is a perfect matching of 2n circle positions (the
// chord layout) decorated, per chord, with a sign and with which endpoint is
// the over-passage.  Enumerating layouts times the 2^n x 2^n decorations
// therefore covers every code with n crossings, up to relabeling.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vktest {

using Layout = std::vector<std::pair<std::size_t, std::size_t>>;

namespace detail {

inline void extend_layouts(std::vector<std::size_t>& open, Layout& partial,
                           std::vector<Layout>& out) {
  if (open.empty()) {
    out.push_back(partial);
    return;
  }
  std::size_t first = open.front();
  for (std::size_t k = 1; k < open.size(); ++k) {
    std::size_t second = open[k];
    std::vector<std::size_t> rest;
    rest.reserve(open.size() - 2);
    for (std::size_t i = 1; i < open.size(); ++i) {
      if (i != k) rest.push_back(open[i]);
    }
    partial.emplace_back(first, second);
    extend_layouts(rest, partial, out);
    partial.pop_back();
  }
}

}  // namespace detail

// All (2n-1)!! perfect matchings of positions 0..2n-1, each chord as
// (first, second) with first < second, chords ordered by first endpoint.
inline std::vector<Layout> chord_layouts(std::size_t n) {
  std::vector<std::size_t> open(2 * n);
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
  std::vector<Layout> out;
  Layout partial;
  detail::extend_layouts(open, partial, out);
  return out;
}

// Chord i is labeled i+1; bit i of role_mask picks which endpoint passes
// over, bit i of sign_mask makes the chord negative.
inline vk::GaussCode code_from_layout(const Layout& layout, unsigned role_mask,
                                      unsigned sign_mask) {
  std::vector<vk::Passage> passages(2 * layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    std::string label = std::to_string(i + 1);
    int sign = ((sign_mask >> i) & 1u) != 0 ? -1 : +1;
    vk::Role first_role = ((role_mask >> i) & 1u) != 0 ? vk::Role::Under : vk::Role::Over;
    vk::Role second_role = first_role == vk::Role::Over ? vk::Role::Under : vk::Role::Over;
    passages[layout[i].first] = vk::Passage{label, first_role, sign};
    passages[layout[i].second] = vk::Passage{std::move(label), second_role, sign};
  }
  return vk::GaussCode(std::move(passages));
}

// Every code with exactly n crossings: all layouts x roles x signs.
inline void for_each_code(std::size_t n,
                          const std::function<void(const vk::GaussCode&)>& f) {
  for (const Layout& layout : chord_layouts(n)) {
    for (unsigned roles = 0; roles < (1u << n); ++roles) {
      for (unsigned signs = 0; signs < (1u << n); ++signs) {
        f(code_from_layout(layout, roles, signs));
      }
    }
  }
}

}  // namespace vktest
