#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidsum/oracle.hpp"

using namespace rigidsum;

namespace {

const std::vector<long> kSquare = {0, 0, 1};  // x^2

}  // namespace

TEST_CASE("char_sum_quadratic_p3") {
  // x^2 over F_3 hits 0 once and 1 twice: S_1 = 1 + 2 zeta.
  CycloElem s1 = char_sum(kSquare, 3, 1);
  CycloElem expect = CycloElem::from_int(3, 1);
  expect += CycloElem::zeta_pow(3, 1);
  expect += CycloElem::zeta_pow(3, 1);
  CHECK(s1 == expect);
  // Over F_9 the sum collapses to the rational value 3.
  CycloElem s2 = char_sum(kSquare, 3, 2);
  CHECK(s2 == CycloElem::from_int(3, 3));
  // Gauss sum modulus: S_1 * conj(S_1) = 3.
  CHECK(s1 * s1.conj() == CycloElem::from_int(3, 3));
}

TEST_CASE("char_sum_quadratic_p5") {
  // Squares in F_5: 0 once, 1 and 4 twice each.
  CycloElem s1 = char_sum(kSquare, 5, 1);
  CycloElem expect = CycloElem::from_int(5, 1);
  expect += CycloElem::zeta_pow(5, 1);
  expect += CycloElem::zeta_pow(5, 1);
  expect += CycloElem::zeta_pow(5, 4);
  expect += CycloElem::zeta_pow(5, 4);
  CHECK(s1 == expect);
  Rat sq;
  REQUIRE(squared_modulus_exact(s1, sq));
  CHECK(sq == Rat(5));
}

TEST_CASE("hasse_davenport_lift") {
  // For the quadratic twist the single inverse root alpha = -S_1 gives
  // -S_n = (-S_1)^n; both sides are computed independently here.
  for (unsigned p : {3u, 5u, 7u}) {
    CycloElem s1 = char_sum(kSquare, p, 1);
    CycloElem alpha = -s1;
    CycloElem an = alpha;
    for (unsigned n = 2; n <= 3; ++n) {
      an = an * alpha;
      CHECK(char_sum(kSquare, p, n) == -an);
    }
  }
}

TEST_CASE("char_sum_enumeration_order_irrelevant") {
  std::vector<long> P = {1, 2, 0, 1};
  CHECK(char_sum(P, 3, 3, false) == char_sum(P, 3, 3, true));
  CHECK(char_sum(kSquare, 5, 2, false) == char_sum(kSquare, 5, 2, true));
}

TEST_CASE("char_sum_galois_equivariance") {
  // sigma_k(S_P) = S_{kP}: the Galois action scales the character.
  std::vector<long> P = {0, 1, 0, 2};
  for (unsigned p : {3u, 5u}) {
    for (unsigned k = 1; k < p; ++k) {
      std::vector<long> kP = P;
      for (auto& c : kP) c *= k;
      CHECK(char_sum(P, p, 1).galois(k) == char_sum(kP, p, 1));
      CHECK(char_sum(P, p, 2).galois(k) == char_sum(kP, p, 2));
    }
  }
}

TEST_CASE("char_sum_constant_shift") {
  // Adding a constant c multiplies every sum by zeta^(Tr c) = zeta^(n c).
  std::vector<long> P = {0, 0, 1};
  std::vector<long> Pc = {1, 0, 1};
  CycloElem lhs = char_sum(Pc, 3, 1);
  CycloElem rhs = char_sum(P, 3, 1) * CycloElem::zeta_pow(3, 1);
  CHECK(lhs == rhs);
}

TEST_CASE("char_sum_ext_matches_prime_field_coefficients") {
  FFContext f25(5, 2);
  std::vector<FFElem> P = {FFElem::from_int(&f25, 0), FFElem::from_int(&f25, 0),
                           FFElem::from_int(&f25, 1)};
  CHECK(char_sum_ext(f25, P) == char_sum(kSquare, 5, 2));
}

TEST_CASE("char_sum_ext_linear_twist_vanishes") {
  // sum over x of zeta^(Tr(a x)) = 0 for any a != 0: a nontrivial additive
  // character sums to zero.
  FFContext f25(5, 2);
  FFElem a = least_root(&f25, {2, 0, 1});  // a^2 = -2
  CHECK(!a.is_zero());
  std::vector<FFElem> P = {FFElem::zero(&f25), a};
  CHECK(char_sum_ext(f25, P).is_zero());
}

TEST_CASE("sum_series_layout") {
  SumSeries s = sum_series(kSquare, 3, 4);
  CHECK(s.p == 3);
  CHECK(s.q == 3);
  REQUIRE(s.values.size() == 4);
  CHECK(s.values[0] == char_sum(kSquare, 3, 1));
  CHECK(s.values[3] == char_sum(kSquare, 3, 4));
}

TEST_CASE("l_poly_gauss_example") {
  SumSeries s = sum_series(kSquare, 3, 4);
  LPolynomial L = l_poly_from_sums(s.values, 3, 3, 1);
  CHECK(L.degree == 1);
  CHECK(L.consistent);
  CHECK(L.integral);
  CHECK(L.consistency_checked_to == 4);
  REQUIRE(L.h1.size() == 2);
  CHECK(L.h1[0] == CycloElem::from_int(3, 1));
  CHECK(L.h1[1] == char_sum(kSquare, 3, 1));  // 1 + S_1 t
}

TEST_CASE("l_poly_trivial_twist_is_inconsistent_without_h2") {
  // P = 0 gives S_n = p^n, which no polynomial of degree 0 explains; the
  // caller must account for the 1/(1 - q t) factor instead.
  std::vector<CycloElem> sums;
  for (unsigned n = 1; n <= 3; ++n)
    sums.push_back(CycloElem::from_rat(3, Rat(int_pow(3, n))));
  LPolynomial L = l_poly_from_sums(sums, 3, 3, 0);
  CHECK(!L.consistent);
  CHECK(L.degree == 0);
}

TEST_CASE("l_poly_flags_non_integral_coefficients") {
  std::vector<CycloElem> sums = {CycloElem::from_rat(3, Rat(1, 2))};
  LPolynomial L = l_poly_from_sums(sums, 3, 3, 1);
  CHECK(!L.integral);
  CHECK(L.h1[1] == CycloElem::from_rat(3, Rat(1, 2)));
}

TEST_CASE("l_poly_zero_sums") {
  std::vector<CycloElem> sums(3, CycloElem(5));
  LPolynomial L = l_poly_from_sums(sums, 5, 5, 2);
  CHECK(L.degree == 0);
  CHECK(L.consistent);
  CHECK(L.integral);
}

TEST_CASE("enumeration_budget_enforced") {
  CHECK_THROWS_AS(char_sum({0, 1}, 11, 8), std::domain_error);
}
