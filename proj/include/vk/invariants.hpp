#pragma once

// Writhe and the smoothing-parity invariants.
//
// gamma(K) sums sgn(c) * t^p(c) over the crossings of K, where p(c) in {0,1}
// is the mod-2 linking number of the two-component link obtained by smoothing
// c.  That linking number, mod 2, equals the parity of the number of chords
// interlaced with c, which is what the fast path computes; gamma_oracle
// performs the smoothings literally and must always agree.
//
// gamma2_bar extends this to second order.  The textbook construction --
// smooth every interlaced pair of opposite-parity crossings, sum
// t^2 * gamma(K_p) over the pairs, reduce coefficientwise mod 2 -- vanishes
// on every diagram, for three independent reasons that are each checked by
// the test suite: the t-coefficient b_p of gamma(K_p) is always even
// (odd-parity chords of any diagram pair up, a handshake count); the
// constant a_p is congruent to the ambient crossing count mod 2 uniformly
// over the pairs; and the number of opposite-parity interlaced pairs is
// itself always even.  The information that survives sits one binary digit
// deeper: gamma2_bar's t^2 coefficient is the second bit of the
// t-coefficient of gamma, i.e. half the odd writhe, mod 2.  That bit is
// exactly invariant under all three Reidemeister moves (an R1 chord is
// even-parity, an R2 pair carries one parity and opposite signs, R3
// preserves parities and signs) and transforms under a crossing switch by
// the degree-one law: switching an even-parity crossing preserves it,
// switching an odd-parity crossing toggles it.  The t^3 coefficient is the
// only term of the literal pair-smoothing sum that could survive; it is
// computed from the actual smoothings so that its predicted vanishing stays
// a measured fact rather than an assumption.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vk/gauss_code.hpp"
#include "vk/polynomial.hpp"
#include "vk/surgery.hpp"

namespace vk {

// Sum of crossing signs, each crossing counted once.
std::int64_t writhe(const GaussCode& code);

// Fast path: exponent of each crossing is its interlacement-degree parity.
IntPolynomial gamma(const GaussCode& code);

// Literal evaluation: smooth each crossing, compute the mod-2 linking number
// of the two components.  Independent check of gamma.
IntPolynomial gamma_oracle(const GaussCode& code);

// gamma mod 2.
Mod2Polynomial gamma_bar(const GaussCode& code);

// Unordered pairs {c, d} of interlaced chords with opposite parity, each pair
// and the whole list in lexicographic label order.
std::vector<std::pair<std::string, std::string>> opposite_parity_pairs(const GaussCode& code);

// The knots obtained by smoothing each opposite-parity interlaced pair, as a
// multiset in pair order.
std::vector<GaussCode> varsigma(const GaussCode& code);

// Second-order invariant, support in {2, 3}.  The t^2 coefficient is the
// second bit of the t-coefficient of gamma (half the odd writhe, mod 2); the
// t^3 coefficient is the surviving term of the literal mod-2 reduction of
// sum_p t^2 gamma(K_p) over the varsigma diagrams, which vanishes on every
// diagram but is computed rather than hard-coded.  See the file comment for
// the invariance discussion.
Mod2Polynomial gamma2_bar(const GaussCode& code);

// Same value computed entirely through surgery: parities and the odd writhe
// via single-crossing smoothings and their literal mod-2 linking numbers,
// interlacement via pair-smoothing component counts, per-pair t-coefficients
// via gamma_oracle.
Mod2Polynomial gamma2_oracle(const GaussCode& code);

}  // namespace vk
