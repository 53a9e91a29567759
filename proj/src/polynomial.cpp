#include "vk/polynomial.hpp"

namespace vk {

namespace {

// "-3", "2t", "t^2", ... with the sign handled by the caller for joined terms.
std::string term_text(std::int64_t magnitude, unsigned exponent) {
  std::string out;
  if (exponent == 0) {
    out = std::to_string(magnitude);
  } else {
    if (magnitude != 1) out = std::to_string(magnitude);
    out += 't';
    if (exponent > 1) out += '^' + std::to_string(exponent);
  }
  return out;
}

}  // namespace

IntPolynomial IntPolynomial::term(std::int64_t coefficient, unsigned exponent) {
  IntPolynomial p;
  p.add_term(coefficient, exponent);
  return p;
}

void IntPolynomial::add_term(std::int64_t coefficient, unsigned exponent) {
  if (coefficient == 0) return;
  auto it = coefficients_.find(exponent);
  if (it == coefficients_.end()) {
    coefficients_.emplace(exponent, coefficient);
    return;
  }
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) coefficients_.erase(it);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [exp, coeff] : other.coefficients_) add_term(coeff, exp);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [exp, coeff] : other.coefficients_) {
    if (coeff == INT64_MIN) throw OverflowError("coefficient overflow");
    add_term(-coeff, exp);
  }
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out += other;
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out -= other;
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out;
  out -= *this;
  return out;
}

IntPolynomial IntPolynomial::shifted(unsigned k) const {
  IntPolynomial out;
  for (const auto& [exp, coeff] : coefficients_) out.coefficients_.emplace(exp + k, coeff);
  return out;
}

std::int64_t IntPolynomial::coefficient(unsigned exponent) const {
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? 0 : it->second;
}

std::string IntPolynomial::str() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, coeff] : coefficients_) {
    std::int64_t magnitude = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) out += '-';
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    out += term_text(magnitude, exp);
  }
  return out;
}

std::int64_t evaluate_at_one(const IntPolynomial& p) {
  std::int64_t sum = 0;
  for (const auto& [exp, coeff] : p.coefficients()) sum = checked_add(sum, coeff);
  return sum;
}

Mod2Polynomial Mod2Polynomial::from(const IntPolynomial& p) {
  Mod2Polynomial out;
  for (const auto& [exp, coeff] : p.coefficients()) {
    if (coeff % 2 != 0) out.exponents_.insert(exp);
  }
  return out;
}

void Mod2Polynomial::toggle(unsigned exponent) {
  auto [it, inserted] = exponents_.insert(exponent);
  if (!inserted) exponents_.erase(it);
}

Mod2Polynomial& Mod2Polynomial::operator+=(const Mod2Polynomial& other) {
  for (unsigned exp : other.exponents_) toggle(exp);
  return *this;
}

std::string Mod2Polynomial::str() const {
  if (exponents_.empty()) return "0";
  std::string out;
  for (unsigned exp : exponents_) {
    if (!out.empty()) out += " + ";
    if (exp == 0) {
      out += '1';
    } else {
      out += 't';
      if (exp > 1) out += '^' + std::to_string(exp);
    }
  }
  return out;
}

}  // namespace vk
