#include "vk/invariants.hpp"

#include <algorithm>

namespace vk {

std::int64_t writhe(const GaussCode& code) {
  std::int64_t sum = 0;
  for (const Chord& c : chords(code)) sum = checked_add(sum, c.sign);
  return sum;
}

IntPolynomial gamma(const GaussCode& code) {
  std::vector<Chord> ch = chords(code);
  std::vector<std::size_t> degrees = interlacement_degrees(ch);
  IntPolynomial g;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    g.add_term(ch[i].sign, static_cast<unsigned>(degrees[i] % 2));
  }
  return g;
}

IntPolynomial gamma_oracle(const GaussCode& code) {
  IntPolynomial g;
  for (const std::string& label : code.labels()) {
    SmoothingResult smoothed = smooth(code, {label});
    g.add_term(code.sign_of(label), static_cast<unsigned>(linking_mod2(smoothed)));
  }
  return g;
}

Mod2Polynomial gamma_bar(const GaussCode& code) {
  return Mod2Polynomial::from(gamma(code));
}

std::vector<std::pair<std::string, std::string>> opposite_parity_pairs(const GaussCode& code) {
  std::vector<Chord> ch = chords(code);
  std::vector<std::size_t> degrees = interlacement_degrees(ch);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    for (std::size_t j = i + 1; j < ch.size(); ++j) {
      if (degrees[i] % 2 == degrees[j] % 2) continue;
      if (!chords_interlaced(ch[i], ch[j])) continue;
      if (ch[i].label <= ch[j].label) {
        pairs.emplace_back(ch[i].label, ch[j].label);
      } else {
        pairs.emplace_back(ch[j].label, ch[i].label);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<GaussCode> varsigma(const GaussCode& code) {
  std::vector<GaussCode> diagrams;
  for (const auto& [a, b] : opposite_parity_pairs(code)) {
    diagrams.push_back(knot_from_pair_smoothing(code, a, b));
  }
  return diagrams;
}

namespace {

// Second binary digit of an even integer: 1 exactly when value == 2 mod 4.
bool second_bit(std::int64_t even_value) {
  return ((even_value % 4) + 4) % 4 == 2;
}

Mod2Polynomial assemble_gamma2(std::int64_t odd_writhe, std::int64_t b_sum) {
  Mod2Polynomial result;
  if (second_bit(odd_writhe)) result.toggle(2);
  if (((b_sum % 2) + 2) % 2 == 1) result.toggle(3);
  return result;
}

}  // namespace

Mod2Polynomial gamma2_bar(const GaussCode& code) {
  // t^2 coefficient: second bit of the t-coefficient of gamma (the odd
  // writhe).  The odd writhe is even -- odd-parity chords come in pairs --
  // so the halving is exact; see the header for why the coefficientwise
  // mod-2 reduction of the varsigma sum cannot carry this bit.
  std::int64_t odd_writhe = gamma(code).coefficient(1);

  // t^3 coefficient: the literal reduction of sum_p t^2 gamma(K_p); only its
  // t^3 term can survive and it is predicted to vanish (each K_p again has
  // evenly many odd chords).  Computed, not assumed.
  std::int64_t b_sum = 0;
  for (const GaussCode& diagram : varsigma(code)) {
    b_sum = checked_add(b_sum, gamma(diagram).coefficient(1));
  }
  return assemble_gamma2(odd_writhe, b_sum);
}

Mod2Polynomial gamma2_oracle(const GaussCode& code) {
  const std::vector<std::string> labels = code.labels();
  std::vector<int> parity(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    parity[i] = linking_mod2(smooth(code, {labels[i]}));
  }

  std::int64_t odd_writhe = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (parity[i] == 1) odd_writhe = checked_add(odd_writhe, code.sign_of(labels[i]));
  }

  std::int64_t b_sum = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (parity[i] == parity[j]) continue;
      SmoothingResult smoothed = smooth(code, {labels[i], labels[j]});
      if (component_count(smoothed) != 1) continue;  // pair not interlaced
      GaussCode diagram(std::move(smoothed.link.components[0]));
      b_sum = checked_add(b_sum, gamma_oracle(diagram).coefficient(1));
    }
  }
  return assemble_gamma2(odd_writhe, b_sum);
}

}  // namespace vk
