#pragma once

// Signed Gauss codes and their chord-diagram structure.
//
// A signed Gauss code records, along one traversal of a knot, each classical
// crossing twice: once as an over-passage, once as an under-passage, both
// carrying the crossing sign.  Virtual crossings are not recorded at all: a
// signed Gauss code determines a virtual knot up to virtual moves, so they
// carry no information in this representation.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vk/errors.hpp"

namespace vk {

enum class Role { Over, Under };
enum class Parity { Even, Odd };

constexpr std::size_t kMaxCrossings = 10000;

struct Passage {
  std::string label;
  Role role = Role::Over;
  int sign = +1;  // +1 or -1

  // Canonical token text, e.g. "O12-" or "Ua+".
  std::string token() const;

  bool operator==(const Passage&) const = default;
};

// Cyclic sequence of passages.  Equality is strict positional equality; use
// cyclically_equal() for equality up to rotation.  The empty code is legal
// and denotes the unknot.
class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<Passage> passages);  // validates, may throw

  static GaussCode parse(std::string_view text);

  const std::vector<Passage>& passages() const noexcept { return passages_; }
  const Passage& at(std::size_t slot) const { return passages_.at(slot); }
  std::size_t size() const noexcept { return passages_.size(); }
  std::size_t crossing_count() const noexcept { return passages_.size() / 2; }
  bool empty() const noexcept { return passages_.empty(); }

  std::string render() const;

  // Labels in order of first occurrence.
  std::vector<std::string> labels() const;
  bool contains(const std::string& label) const;
  // Slot indices of the label's two passages, first < second.
  std::pair<std::size_t, std::size_t> positions_of(const std::string& label) const;
  int sign_of(const std::string& label) const;

  // The code read starting k slots further along.
  GaussCode rotated(std::size_t k) const;

  bool operator==(const GaussCode&) const = default;

 private:
  std::vector<Passage> passages_;
};

GaussCode parse_gauss_code(std::string_view text);
std::string render_gauss_code(const GaussCode& code);

bool cyclically_equal(const GaussCode& a, const GaussCode& b);
// Rotation with lexicographically smallest rendering; never applied
// implicitly anywhere.
GaussCode smallest_rotation(const GaussCode& code);

// One chord per crossing: the two slot positions of its passages in a fixed
// linearization of the cycle, first < second.
struct Chord {
  std::string label;
  std::size_t first = 0;
  std::size_t second = 0;
  int sign = +1;

  bool operator==(const Chord&) const = default;
};

// Chords in order of first occurrence of their labels.
std::vector<Chord> chords(const GaussCode& code);

// True iff the endpoints of the two chords alternate around the circle.
bool interlaced(const GaussCode& code, const std::string& c, const std::string& d);
bool chords_interlaced(const Chord& c, const Chord& d);

struct InterlacementGraph {
  std::vector<std::string> vertices;                       // chord labels
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex index pairs, i < j
  std::vector<std::size_t> degrees;                        // per vertex

  bool has_edge(const std::string& c, const std::string& d) const;
  std::size_t degree_of(const std::string& label) const;
};

InterlacementGraph interlacement_graph(const GaussCode& code);

// Degree of each chord in the interlacement graph, indexed like `chords`.
std::vector<std::size_t> interlacement_degrees(const std::vector<Chord>& chords);

// Odd iff the chord is interlaced with an odd number of chords.
Parity chord_parity(const GaussCode& code, const std::string& label);

}  // namespace vk
