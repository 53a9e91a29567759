#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "vk/errors.hpp"

namespace vk {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow");
  return r;
}

// Finitely supported integer coefficients on powers of t.  Coefficients are
// 64-bit with overflow detection; zero coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial term(std::int64_t coefficient, unsigned exponent);

  void add_term(std::int64_t coefficient, unsigned exponent);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator-() const;

  // Multiplication by t^k.
  IntPolynomial shifted(unsigned k) const;

  std::int64_t coefficient(unsigned exponent) const;
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const std::map<unsigned, std::int64_t>& coefficients() const noexcept {
    return coefficients_;
  }

  std::string str() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::map<unsigned, std::int64_t> coefficients_;
};

std::int64_t evaluate_at_one(const IntPolynomial& p);

// Polynomial over Z/2: the set of exponents with coefficient 1.
class Mod2Polynomial {
 public:
  Mod2Polynomial() = default;

  static Mod2Polynomial from(const IntPolynomial& p);

  void toggle(unsigned exponent);
  Mod2Polynomial& operator+=(const Mod2Polynomial& other);  // symmetric difference

  bool contains(unsigned exponent) const { return exponents_.count(exponent) > 0; }
  bool is_zero() const noexcept { return exponents_.empty(); }
  const std::set<unsigned>& exponents() const noexcept { return exponents_; }

  std::string str() const;

  bool operator==(const Mod2Polynomial&) const = default;

 private:
  std::set<unsigned> exponents_;
};

}  // namespace vk
