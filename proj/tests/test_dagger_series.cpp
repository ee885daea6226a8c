#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidsum/series.hpp"

using namespace rigidsum;

namespace {

// pi*(x - x^d).
PolyK dwork_arg(unsigned p, long d) {
  PolyK f(static_cast<size_t>(d) + 1, PiFieldElem(p));
  f[1] = PiFieldElem::pi(p);
  f[d] = -PiFieldElem::pi(p);
  return f;
}

// Reference exponential sum_k f^k / k!, the definition itself.  Quadratic in
// the truncation order, so only used here to pin exp_poly down.
TruncatedSeries exp_reference(const PolyK& f, long trunc) {
  unsigned p = f[0].prime();
  TruncatedSeries fs = TruncatedSeries::from_poly(f, trunc);
  TruncatedSeries acc = TruncatedSeries::one(p, trunc);
  TruncatedSeries pw = TruncatedSeries::one(p, trunc);
  for (long k = 1; k <= trunc; ++k) {
    pw = pw * fs;
    acc = acc + pw.scaled(PiFieldElem::from_rat(p, Rat(Int(1), factorial(k))));
  }
  return acc;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  return (a - b).is_zero();
}

}  // namespace

TEST_CASE("exp_poly_frozen_example") {
  // exp(pi(x - x^3)) at p = 3, through x^3: 1 + pi x - 3/2 x^2 - 3 pi/2 x^3.
  unsigned p = 3;
  TruncatedSeries e = exp_poly(dwork_arg(p, 3), 3);
  CHECK(e.coeff(0) == PiFieldElem::from_int(p, 1));
  CHECK(e.coeff(1) == PiFieldElem::pi(p));
  CHECK(e.coeff(2) == PiFieldElem::from_rat(p, Rat(-3, 2)));
  CHECK(e.coeff(3) == PiFieldElem::monomial(p, Rat(-3, 2), 1));
}

TEST_CASE("exp_poly_matches_reference_sum") {
  for (unsigned p : {2u, 3u, 5u}) {
    TruncatedSeries fast = exp_poly(dwork_arg(p, p == 2 ? 2 : p), 40);
    TruncatedSeries ref = exp_reference(dwork_arg(p, p == 2 ? 2 : p), 40);
    CHECK(series_equal(fast, ref));
  }
  // A non-Dwork argument with several terms.
  PolyK f = poly_zero(5);
  f.resize(4, PiFieldElem(5));
  f[1] = PiFieldElem::from_rat(5, Rat(2, 3));
  f[2] = PiFieldElem::pi(5);
  f[3] = PiFieldElem::from_int(5, -1);
  CHECK(series_equal(exp_poly(f, 25), exp_reference(f, 25)));
}

TEST_CASE("exp_poly_differential_equation") {
  // (exp f)' = f' exp f, exactly through the retained coefficients.
  unsigned p = 5;
  PolyK f = dwork_arg(p, 5);
  TruncatedSeries e = exp_poly(f, 30);
  TruncatedSeries lhs = e.derivative();
  TruncatedSeries rhs = e.mul_poly(poly_derivative(f)).retrunc(29);
  CHECK(series_equal(lhs, rhs));
}

TEST_CASE("exp_poly_homomorphism") {
  unsigned p = 5;
  PolyK f = poly_from_ints(p, {0, 1, 2});
  PolyK g = poly_from_ints(p, {0, 0, -2, 3});
  f[1] = PiFieldElem::pi(p);
  TruncatedSeries lhs = exp_poly(poly_add(f, g), 20);
  TruncatedSeries rhs = exp_poly(f, 20) * exp_poly(g, 20);
  CHECK(series_equal(lhs, rhs));
  // exp(-f) is the reciprocal.
  TruncatedSeries prod = exp_poly(f, 20) * exp_poly(poly_neg(f), 20);
  CHECK(series_equal(prod, TruncatedSeries::one(p, 20)));
}

TEST_CASE("exp_poly_rejects_constant_term") {
  PolyK f = poly_from_ints(3, {1, 1});
  CHECK_THROWS_AS(exp_poly(f, 5), std::invalid_argument);
}

TEST_CASE("splitting_series_growth_certificate") {
  // The coefficients of exp(pi(x - x^p)) satisfy v(c_i)/i >= (p-1)/p^2 on the
  // window 10..60 with a 1/20 margin to spare.
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    TruncatedSeries theta = exp_poly(dwork_arg(p, p), 60);
    Rat target = Rat(static_cast<long>(p) - 1, static_cast<long>(p) * p) - Rat(1, 20);
    CHECK(theta.measured_slope(10, 60) >= target);
  }
}

TEST_CASE("tail_bound_propagation") {
  unsigned p = 3;
  TruncatedSeries s = exp_poly(dwork_arg(p, 3), 20);
  certify_tail(s, Rat(2, 9));
  REQUIRE(s.tail());
  Val off = s.tail()->offset;
  CHECK(off.is_finite());

  TruncatedSeries sh = s.mul_xpow(4);
  REQUIRE(sh.tail());
  CHECK(sh.tail()->slope == Rat(2, 9));
  CHECK(sh.tail()->offset == off - Rat(8, 9));

  TruncatedSeries d = s.derivative();
  REQUIRE(d.tail());
  CHECK(d.tail()->offset == off + Rat(2, 9));

  TruncatedSeries fr = frobenius_substitute(s, 3);
  REQUIRE(fr.tail());
  CHECK(fr.tail()->slope == Rat(2, 27));
  CHECK(fr.tail()->offset == off);
  // Substitution really is f(x^q).
  for (long i = 0; i <= fr.trunc(); ++i) {
    if (i % 3 == 0)
      CHECK(fr.coeff(i) == s.coeff(i / 3));
    else
      CHECK(fr.coeff(i).is_zero());
  }

  TruncatedSeries sc = s.scaled(PiFieldElem::pi(p));
  REQUIRE(sc.tail());
  CHECK(sc.tail()->offset == off + Rat(1, 2));

  TruncatedSeries sum = s + s;
  REQUIRE(sum.tail());
  CHECK(sum.tail()->slope == Rat(2, 9));
  CHECK(sum.tail()->offset == off);

  TruncatedSeries prod = s * s;
  REQUIRE(prod.tail());
  CHECK(prod.tail()->slope == Rat(2, 9));
  CHECK(prod.tail()->offset == off + off);

  // Dropping one factor's certificate drops the product's.
  TruncatedSeries bare = s;
  bare.set_tail(std::nullopt);
  CHECK(!(s * bare).tail());

  // Scaling by zero leaves an identically zero series, whose tail bound is
  // infinite; evaluating it costs no precision.
  TruncatedSeries z = s.scaled(PiFieldElem(p));
  REQUIRE(z.tail());
  CHECK(!z.tail()->offset.is_finite());
  CHECK(z.eval(PiAdicApprox::exact(PiFieldElem::from_int(p, 1))).is_exact());
}

TEST_CASE("tail_bound_validity_on_stored_range") {
  // The certified bound really holds for every stored coefficient.
  for (unsigned p : {3u, 5u}) {
    TruncatedSeries s = exp_poly(dwork_arg(p, p), 50);
    Rat slope(static_cast<long>(p) - 1, static_cast<long>(p) * p);
    certify_tail(s, slope);
    for (long i = 0; i <= 50; ++i) {
      if (s.coeff(i).is_zero()) continue;
      CHECK(s.coeff(i).valuation() >= s.tail()->at(i));
    }
  }
}

TEST_CASE("mul_poly_agrees_with_series_product") {
  unsigned p = 5;
  TruncatedSeries s = exp_poly(dwork_arg(p, 5), 15);
  PolyK f = poly_from_ints(p, {3, 0, 1, 7});
  TruncatedSeries a = s.mul_poly(f);
  TruncatedSeries b = s * TruncatedSeries::from_poly(f, 15);
  CHECK(series_equal(a, b));
}

TEST_CASE("eval_weakens_by_tail") {
  unsigned p = 3;
  TruncatedSeries s = exp_poly(dwork_arg(p, 3), 30);
  // Without a certificate the value of the truncation is exact.
  PiAdicApprox at_pi = s.eval(PiAdicApprox::exact(PiFieldElem::pi(p)));
  CHECK(at_pi.is_exact());

  certify_tail(s, Rat(2, 9));
  PiAdicApprox v = s.eval(PiAdicApprox::exact(PiFieldElem::from_int(p, 1)));
  CHECK(!v.is_exact());
  CHECK(v.known_mod() == s.tail()->at(31));

  // Points outside the closed unit disc are rejected.
  CHECK_THROWS_AS(s.eval(PiAdicApprox::exact(PiFieldElem::pi_pow(p, -1))),
                  std::domain_error);
}

TEST_CASE("eval_horner_matches_direct_sum") {
  unsigned p = 3;
  TruncatedSeries s = exp_poly(dwork_arg(p, 3), 12);
  PiFieldElem omega = PiFieldElem::pi(p);
  PiFieldElem direct(p);
  PiFieldElem pw = PiFieldElem::from_int(p, 1);
  for (long i = 0; i <= 12; ++i) {
    direct += s.coeff(i) * pw;
    pw = pw * omega;
  }
  CHECK(s.eval(PiAdicApprox::exact(omega)).value() == direct);
}

TEST_CASE("laurent_fragment_w_r") {
  unsigned p = 3;
  LaurentFragment f(p);
  f.set(-2, PiFieldElem::pi(p));
  f.set(3, PiFieldElem::from_int(p, 9));
  // w_r = min(1/2 - 2r, 2 + 3r).
  CHECK(w_r(f, Rat(1, 2)) == Val::of(-1, 2));
  CHECK(w_r(f, Rat(0)) == Val::of(1, 2));
  // Overwrite with zero erases the term.
  f.set(-2, PiFieldElem(p));
  CHECK(w_r(f, Rat(1, 2)) == Val::of(7, 2));
  CHECK(w_r(LaurentFragment(p), Rat(1)) == Val::inf());
}
