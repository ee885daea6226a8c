#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigidsum/cyclo.hpp"
#include "rigidsum/sigma_nabla.hpp"

using namespace rigidsum;

namespace {

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  return (a - b).is_zero();
}

bool frobenius_equal(const SigmaNablaModule& a, const SigmaNablaModule& b) {
  if (a.rank != b.rank) return false;
  for (size_t i = 0; i < a.rank; ++i)
    for (size_t j = 0; j < a.rank; ++j)
      if (!series_equal(a.frobenius.at(i, j), b.frobenius.at(i, j))) return false;
  return true;
}

PolyK random_twist(unsigned p, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> deg(2, 4);
  std::uniform_int_distribution<long> coeff(-3, 3);
  long d = deg(rng);
  std::vector<long> c(static_cast<size_t>(d) + 1, 0);
  for (long i = 1; i < d; ++i) c[i] = coeff(rng);
  c[d] = coeff(rng) | 1;  // nonzero leading coefficient
  return poly_from_ints(p, c);
}

// U' + N U, which must vanish for the horizontal frame.
bool horizontal_residual_is_zero(const SigmaNablaModule& m,
                                 const Mat<TruncatedSeries>& u) {
  for (size_t i = 0; i < m.rank; ++i)
    for (size_t j = 0; j < m.rank; ++j) {
      TruncatedSeries res = u.at(i, j).derivative();
      for (size_t k = 0; k < m.rank; ++k)
        res = res + u.at(k, j).mul_poly(m.connection.at(i, k)).retrunc(m.trunc - 1);
      if (!res.is_zero()) return false;
    }
  return true;
}

// Phi(x) U(x^q) = U(x): Frobenius fixes the horizontal frame.
bool dwork_trick_holds(const SigmaNablaModule& m, const Mat<TruncatedSeries>& u) {
  for (size_t i = 0; i < m.rank; ++i)
    for (size_t j = 0; j < m.rank; ++j) {
      TruncatedSeries lhs(m.p, m.trunc);
      for (size_t k = 0; k < m.rank; ++k)
        lhs = lhs + m.frobenius.at(i, k) * frobenius_substitute(u.at(k, j), m.q);
      if (!series_equal(lhs, u.at(i, j))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("dwork_module_shape") {
  SigmaNablaModule m = make_dwork_module(3, {0, 0, 1}, 3, 30);
  CHECK(m.rank == 1);
  CHECK(m.breaks == std::vector<long>{2});
  // Connection is -pi P' = -2 pi x.
  const PolyK& n = m.connection.at(0, 0);
  REQUIRE(poly_deg(n) == 1);
  CHECK(n[1] == PiFieldElem::monomial(3, Rat(-2), 1));
  // Frobenius is exp(pi(x^2 - x^6)).
  PolyK arg = poly_from_ints(3, {0, 0, 1, 0, 0, 0, -1});
  arg = poly_scale(arg, PiFieldElem::pi(3));
  CHECK(series_equal(m.frobenius.at(0, 0), exp_poly(arg, 30)));
  REQUIRE(m.frobenius.at(0, 0).tail());
  CHECK(m.frobenius.at(0, 0).tail()->slope == Rat(2, 18));
}

TEST_CASE("dwork_module_rejects_bad_twists") {
  CHECK_THROWS_AS(make_dwork_module(3, {1, 1}, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(make_dwork_module(3, {0, 1}, 5, 10), std::invalid_argument);
  // Zero twist degenerates to the unit object.
  SigmaNablaModule t = make_dwork_module(3, {0}, 3, 10);
  CHECK(t.breaks == std::vector<long>{0});
  CHECK(series_equal(t.frobenius.at(0, 0), TruncatedSeries::one(3, 10)));
}

TEST_CASE("compatibility_exact_on_window") {
  for (unsigned p : {3u, 5u}) {
    SigmaNablaModule m = make_dwork_module(p, {0, 1, 0, 1}, p, 40);
    CompatibilityReport rep = check_compatibility(m);
    CHECK(rep.ok);
    CHECK(rep.window == 39);
    CHECK(rep.first_failure == -1);
  }
}

TEST_CASE("compatibility_pins_the_connection_sign") {
  // Flipping the connection sign breaks commutation immediately.
  SigmaNablaModule m = make_dwork_module(3, {0, 0, 1}, 3, 20);
  m.connection.at(0, 0) = poly_neg(m.connection.at(0, 0));
  CompatibilityReport rep = check_compatibility(m);
  CHECK(!rep.ok);
  CHECK(rep.first_failure >= 0);
  CHECK(rep.deficit.is_finite());
}

TEST_CASE("tensor_of_twists_is_the_twist_of_the_sum") {
  unsigned p = 5;
  PolyK f = poly_from_ints(p, {0, 1, 2});
  PolyK g = poly_from_ints(p, {0, 2, 0, 1});
  SigmaNablaModule a = make_dwork_module(f, p, 30);
  SigmaNablaModule b = make_dwork_module(g, p, 30);
  SigmaNablaModule ab = tensor(a, b);
  SigmaNablaModule sum = make_dwork_module(poly_add(f, g), p, 30);
  CHECK(ab.rank == 1);
  CHECK(frobenius_equal(ab, sum));
  CHECK(poly_is_zero(poly_sub(ab.connection.at(0, 0), sum.connection.at(0, 0))));
  CHECK(ab.breaks == std::vector<long>{3});
  CHECK(check_compatibility(ab).ok);
}

TEST_CASE("dual_is_the_opposite_twist") {
  unsigned p = 3;
  PolyK f = poly_from_ints(p, {0, 2, 0, 0, 1});
  SigmaNablaModule m = make_dwork_module(f, p, 25);
  SigmaNablaModule md = dual(m);
  SigmaNablaModule neg = make_dwork_module(poly_neg(f), p, 25);
  CHECK(frobenius_equal(md, neg));
  CHECK(poly_is_zero(poly_sub(md.connection.at(0, 0), neg.connection.at(0, 0))));
  CHECK(check_compatibility(md).ok);
  // Double dual returns the original.
  CHECK(frobenius_equal(dual(md), m));
  // The pairing is exact: Phi_dual^T Phi = I entrywise for rank 1.
  TruncatedSeries prod = md.frobenius.at(0, 0) * m.frobenius.at(0, 0);
  CHECK(series_equal(prod, TruncatedSeries::one(p, 25)));
}

TEST_CASE("direct_sum_block_structure") {
  unsigned p = 3;
  SigmaNablaModule a = make_dwork_module(p, {0, 0, 1}, p, 20);
  SigmaNablaModule b = make_dwork_module(p, {0, 1, 0, 1}, p, 20);
  SigmaNablaModule s = direct_sum(a, b);
  CHECK(s.rank == 2);
  CHECK(s.breaks == std::vector<long>{2, 3});
  CHECK(series_equal(s.frobenius.at(0, 0), a.frobenius.at(0, 0)));
  CHECK(series_equal(s.frobenius.at(1, 1), b.frobenius.at(0, 0)));
  CHECK(s.frobenius.at(0, 1).is_zero());
  REQUIRE(s.frobenius.at(0, 1).tail());
  CHECK(!s.frobenius.at(0, 1).tail()->offset.is_finite());
  CHECK(check_compatibility(s).ok);
  CompatibilityReport dr = check_compatibility(dual(s));
  CHECK(dr.ok);
}

TEST_CASE("horizontal_basis_randomized") {
  std::mt19937_64 rng(404);
  for (int iter = 0; iter < 8; ++iter) {
    unsigned p = iter % 2 == 0 ? 3 : 5;
    SigmaNablaModule m = make_dwork_module(random_twist(p, rng), p, 40);
    Mat<TruncatedSeries> u = horizontal_basis(m);
    CHECK(u.at(0, 0).coeff(0) == PiFieldElem::from_int(p, 1));
    CHECK(horizontal_residual_is_zero(m, u));
    CHECK(dwork_trick_holds(m, u));
  }
}

TEST_CASE("horizontal_basis_rank_two") {
  unsigned p = 3;
  SigmaNablaModule m = direct_sum(make_dwork_module(p, {0, 0, 1}, p, 30),
                                  make_dwork_module(p, {0, 1, 1}, p, 30));
  Mat<TruncatedSeries> u = horizontal_basis(m);
  CHECK(horizontal_residual_is_zero(m, u));
  CHECK(dwork_trick_holds(m, u));
  // The dual route: the horizontal frame of the dual is the inverse
  // transpose, so U_dual^T U = I.
  Mat<TruncatedSeries> ud = horizontal_basis(dual(m));
  for (size_t i = 0; i < m.rank; ++i)
    for (size_t j = 0; j < m.rank; ++j) {
      TruncatedSeries acc(p, m.trunc);
      for (size_t k = 0; k < m.rank; ++k)
        acc = acc + ud.at(k, i) * u.at(k, j);
      CHECK(series_equal(acc, i == j ? TruncatedSeries::one(p, m.trunc)
                                     : TruncatedSeries(p, m.trunc)));
    }
}

TEST_CASE("teichmuller_lift_properties") {
  CHECK(teichmuller_lift(0, 5, Rat(20)).value().is_zero());
  CHECK(teichmuller_lift(1, 5, Rat(20)).value() == PiFieldElem::from_int(5, 1));
  CHECK(teichmuller_lift(4, 5, Rat(20)).value() == PiFieldElem::from_int(5, -1));
  CHECK(teichmuller_lift(6, 5, Rat(20)).value() == PiFieldElem::from_int(5, 1));
  for (unsigned p : {5u, 7u, 11u}) {
    for (long a = 2; a + 1 < static_cast<long>(p); ++a) {
      Rat m(24);
      PiAdicApprox t = teichmuller_lift(a, p, m);
      CHECK(t.known_mod() >= m);
      REQUIRE(t.value().is_rational());
      Rat tv = t.value().rational_part();
      // t == a (mod p) and t^(p-1) == 1 (mod p^m).
      CHECK(mod_ppow(tv - a, p, 1) == 0);
      Rat pw(1);
      for (unsigned k = 1; k < p; ++k) pw *= tv;
      CHECK(vp_rat(pw - 1, p) >= 24);
    }
  }
}

TEST_CASE("fiber_at_one_is_the_canonical_root_of_unity") {
  // The fiber Frobenius of L_x at the Teichmuller point 1 is theta(1), which
  // agrees with the Hensel branch z == 1 + pi (mod pi^2) of z^p = 1.
  for (unsigned p : {3u, 5u}) {
    SigmaNablaModule m = make_dwork_module(p, {0, 1}, p, 80);
    Mat<PiAdicApprox> f =
        fiber_frobenius(m, PiAdicApprox::exact(PiFieldElem::from_int(p, 1)));
    REQUIRE(f.rows() == 1);
    PiAdicApprox z = hensel_zeta_p(p, Rat(10));
    CHECK(agreement_valuation(f.at(0, 0), z) >= Rat(3));
    CHECK(f.at(0, 0).certified_nonzero());
  }
}

TEST_CASE("fiber_requires_certificates") {
  SigmaNablaModule m = make_dwork_module(3, {0, 1}, 3, 20);
  m.frobenius.at(0, 0).set_tail(std::nullopt);
  CHECK_THROWS_AS(
      fiber_frobenius(m, PiAdicApprox::exact(PiFieldElem::from_int(3, 1))),
      std::domain_error);
}

TEST_CASE("fiber_of_direct_sum_is_blockwise") {
  unsigned p = 5;
  SigmaNablaModule a = make_dwork_module(p, {0, 0, 1}, p, 60);
  SigmaNablaModule b = make_dwork_module(p, {0, 1}, p, 60);
  SigmaNablaModule s = direct_sum(a, b);
  PiAdicApprox t = teichmuller_lift(2, p, Rat(30));
  Mat<PiAdicApprox> fs = fiber_frobenius(s, t);
  Mat<PiAdicApprox> fa = fiber_frobenius(a, t);
  Mat<PiAdicApprox> fb = fiber_frobenius(b, t);
  CHECK(fs.at(0, 0).value() == fa.at(0, 0).value());
  CHECK(fs.at(1, 1).value() == fb.at(0, 0).value());
  CHECK(fs.at(0, 0).known_mod() == fa.at(0, 0).known_mod());
  CHECK(fs.at(0, 1).value().is_zero());
  CHECK(fs.at(0, 1).is_exact());
}
