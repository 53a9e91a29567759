#pragma once

// Reidemeister moves on Gauss codes.
//
// Virtual moves need no engine of their own: the Gauss-code representation
// quotients them away, so only the classical moves act here.  R1 inserts or
// deletes an isolated chord; R2 inserts or deletes a pair of adjacent,
// oppositely signed chords; R3 slides a strand across a crossing, realized as
// the braid-like variant below.  Other R3 orientation/sign variants are
// reachable from this one by R2 conjugation and are not implemented
// separately.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vk/gauss_code.hpp"

namespace vk {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };
enum class InsertOrder { OverFirst, UnderFirst };
enum class R2Variant { Interleaved, Nested };

// A located, validated application point for one move.  Which fields are
// meaningful depends on `kind`: gaps and sign for inserts, labels for
// deletes, labels plus the three adjacent-pair positions for R3.
struct MoveSite {
  MoveKind kind = MoveKind::R1Insert;
  std::size_t gap1 = 0;
  std::size_t gap2 = 0;
  int sign = +1;
  InsertOrder order = InsertOrder::OverFirst;
  R2Variant variant = R2Variant::Interleaved;
  std::vector<std::string> labels;
  std::array<std::size_t, 3> positions{0, 0, 0};

  bool operator==(const MoveSite&) const = default;
};

// Insert a kink: an adjacent (O, U) or (U, O) pair with a fresh label, both
// passages carrying `sign`.  Gaps run from 0 (before the first slot) to
// size() (after the last).
GaussCode r1_insert(const GaussCode& code, std::size_t gap, int sign, InsertOrder order);

// Remove a kink; the label's two passages must be cyclically adjacent.
GaussCode r1_delete(const GaussCode& code, const std::string& label);

// Insert two fresh crossings a, b with signs (sign, -sign): the pair (Oa, Ob)
// at gap1 and, at gap2, (Ua, Ub) for Interleaved or (Ub, Ua) for Nested.
// Interleaved makes the new chords cross each other, Nested makes them
// disjoint.  gap1 == gap2 is legal; the over pair is placed first.
GaussCode r2_insert(const GaussCode& code, std::size_t gap1, std::size_t gap2,
                    R2Variant variant, int sign);

// Remove a pair of crossings forming an r2_insert pattern: opposite signs,
// the two over-passages cyclically adjacent, the two under-passages
// cyclically adjacent in either variant order.
GaussCode r2_delete(const GaussCode& code, const std::string& a, const std::string& b);

// Labels with cyclically adjacent passages (r1_delete candidates), in order
// of the slot where the adjacency is first seen.
std::vector<std::string> r1_delete_candidates(const GaussCode& code);
// Label pairs forming an R2 pattern (r2_delete candidates).
std::vector<std::pair<std::string, std::string>> r2_delete_candidates(const GaussCode& code);

// Braid-like R3 sites: labels x, y, z with equal signs whose passages form
// three disjoint cyclically adjacent pairs (Ox Oy), (Ux Oz), (Uy Uz).
std::vector<MoveSite> r3_sites(const GaussCode& code);

// Swap the two passages within each of the three pairs.  Accepts the pairs in
// either internal order, so applying the same site twice is the identity;
// anything else is a stale site.
GaussCode r3_apply(const GaussCode& code, const MoveSite& site);

// Dispatch on site.kind; used to replay move scripts.
GaussCode apply_move(const GaussCode& code, const MoveSite& site);

// Uniform random pairing of 2n slots into chords, fair independent signs and
// over/under orders.  Labels are "1".."n" by first slot.  Deterministic for a
// fixed seed.
GaussCode random_code(std::size_t n, std::uint64_t seed);

struct ScrambleResult {
  GaussCode code;
  std::vector<MoveSite> applied;
};

// Apply `steps` random applicable moves drawn from `allowed`.  Inserts pick
// uniform gaps; deletes and R3 pick uniformly among detected sites.
ScrambleResult scramble(const GaussCode& code, std::uint64_t seed, std::size_t steps,
                        const std::set<MoveKind>& allowed);

// Smallest positive integer, as a decimal string, unused as a label.
std::string fresh_label(const GaussCode& code);

}  // namespace vk
