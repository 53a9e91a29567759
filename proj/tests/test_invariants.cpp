#include <doctest.h>

#include <string>
#include <vector>

#include "vk/gauss_code.hpp"
#include "vk/invariants.hpp"
#include "vk/polynomial.hpp"

using namespace vk;

namespace {

const char* kTrefoil = "O1-U2-O3-U1-O2-U3-";
const char* kVirtualTrefoil = "O1-O2-U1-U2-";
const char* kFigureEight = "O1+U2+O3-U4-O2+U1+O4-U3-";
const char* kMiyazawaValue = "O1+O2+U1+U2+O3+U3+O4+U4+";  // gamma = 2 + 2t
// chord 2 is even, chords 1 and 3 are odd; both odd chords meet chord 2
const char* kOddMeetsEven = "O1+O2+U1+O3+U2+U3+";

}  // namespace

TEST_CASE("writhe sums the crossing signs once each") {
  CHECK(writhe(parse_gauss_code(kTrefoil)) == -3);
  CHECK(writhe(parse_gauss_code(kVirtualTrefoil)) == -2);
  CHECK(writhe(parse_gauss_code(kFigureEight)) == 0);
  CHECK(writhe(GaussCode{}) == 0);
  CHECK(writhe(parse_gauss_code("O1+U1+")) == 1);
}

TEST_CASE("gamma golden values") {
  CHECK(gamma(parse_gauss_code(kTrefoil)) == IntPolynomial::term(-3, 0));
  CHECK(gamma(parse_gauss_code(kVirtualTrefoil)) == IntPolynomial::term(-2, 1));
  CHECK(gamma(GaussCode{}).is_zero());
  CHECK(gamma(parse_gauss_code("O1+U1+")) == IntPolynomial::term(1, 0));
  CHECK(gamma(parse_gauss_code("O1-U1-")) == IntPolynomial::term(-1, 0));
  CHECK(gamma(parse_gauss_code(kMiyazawaValue)) ==
        IntPolynomial::term(2, 0) + IntPolynomial::term(2, 1));
}

TEST_CASE("gamma_oracle agrees on the golden values") {
  for (const char* text : {kTrefoil, kVirtualTrefoil, kFigureEight, kMiyazawaValue,
                           kOddMeetsEven, "O1+U1+", ""}) {
    GaussCode code = parse_gauss_code(text);
    CHECK(gamma_oracle(code) == gamma(code));
  }
}

TEST_CASE("gamma_bar is gamma mod 2") {
  Mod2Polynomial trefoil_bar = gamma_bar(parse_gauss_code(kTrefoil));
  CHECK(trefoil_bar.exponents() == std::set<unsigned>{0});
  CHECK(gamma_bar(parse_gauss_code(kVirtualTrefoil)).is_zero());
  CHECK(gamma_bar(GaussCode{}).is_zero());
}

TEST_CASE("classical codes have gamma constant in t") {
  for (const char* text : {kTrefoil, kFigureEight}) {
    IntPolynomial g = gamma(parse_gauss_code(text));
    CHECK(g.coefficient(1) == 0);
  }
  CHECK(gamma(parse_gauss_code(kFigureEight)).is_zero());
}

TEST_CASE("evaluating gamma at 1 gives the writhe") {
  for (const char* text :
       {kTrefoil, kVirtualTrefoil, kFigureEight, kMiyazawaValue, kOddMeetsEven}) {
    GaussCode code = parse_gauss_code(text);
    CHECK(evaluate_at_one(gamma(code)) == writhe(code));
  }
}

TEST_CASE("opposite-parity pairs") {
  CHECK(opposite_parity_pairs(parse_gauss_code(kTrefoil)).empty());
  CHECK(opposite_parity_pairs(parse_gauss_code(kVirtualTrefoil)).empty());
  CHECK(opposite_parity_pairs(parse_gauss_code("O1+U1+")).empty());

  auto pairs = opposite_parity_pairs(parse_gauss_code(kOddMeetsEven));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"1", "2"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"2", "3"});
}

TEST_CASE("varsigma smooths each opposite-parity pair") {
  CHECK(varsigma(parse_gauss_code(kTrefoil)).empty());

  std::vector<GaussCode> diagrams = varsigma(parse_gauss_code(kOddMeetsEven));
  REQUIRE(diagrams.size() == 2);
  CHECK(diagrams[0].render() == "U3+O3+");
  CHECK(diagrams[1].render() == "U1+O1+");
}

TEST_CASE("gamma2_bar on the curated codes") {
  Mod2Polynomial t2;
  t2.toggle(2);
  // A kink and the classical diagrams have no odd-parity chords at all, so
  // the odd writhe is 0.
  CHECK(gamma2_bar(parse_gauss_code("O1+U1+")).is_zero());
  CHECK(gamma2_bar(parse_gauss_code(kTrefoil)).is_zero());
  CHECK(gamma2_bar(parse_gauss_code(kFigureEight)).is_zero());
  // Virtual trefoil: odd chords 1 and 2 carry signs -1, -1; odd writhe -2.
  CHECK(gamma2_bar(parse_gauss_code(kVirtualTrefoil)) == t2);
  // Stand-in: odd chords 1 and 2 carry signs +1, +1; odd writhe +2.
  CHECK(gamma2_bar(parse_gauss_code(kMiyazawaValue)) == t2);
  // Odd chords 1 and 3 carry signs +1, +1; both pair smoothings leave a
  // single even chord, so the t^3 term stays empty.
  CHECK(gamma2_bar(parse_gauss_code(kOddMeetsEven)) == t2);
}

TEST_CASE("gamma2_oracle agrees on the curated codes") {
  for (const char* text : {kTrefoil, kVirtualTrefoil, kFigureEight, kMiyazawaValue,
                           kOddMeetsEven, "O1+U1+", ""}) {
    GaussCode code = parse_gauss_code(text);
    CHECK(gamma2_oracle(code) == gamma2_bar(code));
  }
}

TEST_CASE("the Miyazawa-value stand-in") {
  GaussCode code = parse_gauss_code(kMiyazawaValue);
  IntPolynomial expected = IntPolynomial::term(2, 0) + IntPolynomial::term(2, 1);
  CHECK(gamma(code) == expected);
  CHECK(gamma_oracle(code) == expected);
  CHECK(writhe(code) == 4);
  CHECK(gamma(code).str() == "2 + 2t");
}
