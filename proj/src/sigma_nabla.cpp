#include "rigidsum/sigma_nabla.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidsum {

namespace {

bool is_prime_power_of(unsigned q, unsigned p) {
  if (q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

PolyK poly_one(unsigned p) { return {PiFieldElem::from_int(p, 1)}; }

Mat<PolyK> poly_ident(unsigned p, size_t n) {
  Mat<PolyK> m(n, n, poly_zero(p));
  for (size_t i = 0; i < n; ++i) m.at(i, i) = poly_one(p);
  return m;
}

TruncatedSeries zero_series(unsigned p, long trunc) {
  TruncatedSeries s(p, trunc);
  s.set_tail(TailBound{Rat(0), Val::inf()});
  return s;
}

void check_pair(const SigmaNablaModule& a, const SigmaNablaModule& b) {
  if (a.p != b.p || a.q != b.q)
    throw std::invalid_argument("SigmaNablaModule: mismatched p or q");
}

// Coefficient matrices of a polynomial matrix, degrees 0..deg.
std::vector<Mat<PiFieldElem>> poly_mat_coeffs(const Mat<PolyK>& n, unsigned p) {
  long deg = 0;
  for (size_t i = 0; i < n.rows(); ++i)
    for (size_t j = 0; j < n.cols(); ++j) deg = std::max(deg, poly_deg(n.at(i, j)));
  std::vector<Mat<PiFieldElem>> out(
      static_cast<size_t>(deg + 1), Mat<PiFieldElem>(n.rows(), n.cols(), PiFieldElem(p)));
  for (size_t i = 0; i < n.rows(); ++i)
    for (size_t j = 0; j < n.cols(); ++j) {
      const PolyK& f = n.at(i, j);
      for (size_t k = 0; k < f.size(); ++k) out[k].at(i, j) = f[k];
    }
  return out;
}

Mat<PiFieldElem> scalar_mat_mul(const Mat<PiFieldElem>& a, const Mat<PiFieldElem>& b,
                                unsigned p) {
  return mat_mul(a, b, PiFieldElem(p),
                 [](const PiFieldElem& x, const PiFieldElem& y) { return x + y; },
                 [](const PiFieldElem& x, const PiFieldElem& y) { return x * y; });
}

}  // namespace

SigmaNablaModule trivial_module(unsigned p, unsigned q, long trunc) {
  SigmaNablaModule m;
  m.p = p;
  m.q = q;
  m.trunc = trunc;
  m.rank = 1;
  m.connection = Mat<PolyK>(1, 1, poly_zero(p));
  TruncatedSeries one = TruncatedSeries::one(p, trunc);
  certify_tail(one, Rat(static_cast<long>(p) - 1, static_cast<long>(p) * p));
  m.frobenius = Mat<TruncatedSeries>(1, 1, one);
  m.twists = {poly_zero(p)};
  m.breaks = {0};
  return m;
}

SigmaNablaModule make_dwork_module(const PolyK& P, unsigned q, long trunc) {
  if (P.empty() || P[0].prime() == 0)
    throw std::invalid_argument("make_dwork_module: empty twist");
  unsigned p = P[0].prime();
  if (!is_prime_power_of(q, p))
    throw std::invalid_argument("make_dwork_module: q must be a power of p");
  if (!P[0].is_zero())
    throw std::invalid_argument(
        "make_dwork_module: twist must have zero constant term");
  long d = poly_deg(P);
  if (d < 1) return trivial_module(p, q, trunc);

  SigmaNablaModule m;
  m.p = p;
  m.q = q;
  m.trunc = trunc;
  m.rank = 1;
  PolyK conn = poly_scale(poly_derivative(P), -PiFieldElem::pi(p));
  m.connection = Mat<PolyK>(1, 1, conn);
  PolyK arg = poly_scale(poly_sub(P, poly_compose_xq(P, q)), PiFieldElem::pi(p));
  TruncatedSeries phi = exp_poly(arg, trunc);
  certify_tail(phi, Rat(static_cast<long>(p) - 1, static_cast<long>(p) * p * d));
  m.frobenius = Mat<TruncatedSeries>(1, 1, phi);
  m.twists = {P};
  m.breaks = {d};
  return m;
}

SigmaNablaModule make_dwork_module(unsigned p, const std::vector<long>& P,
                                   unsigned q, long trunc) {
  return make_dwork_module(poly_from_ints(p, P), q, trunc);
}

SigmaNablaModule tensor(const SigmaNablaModule& a, const SigmaNablaModule& b) {
  check_pair(a, b);
  unsigned p = a.p;
  long t = std::min(a.trunc, b.trunc);
  SigmaNablaModule m;
  m.p = p;
  m.q = a.q;
  m.trunc = t;
  m.rank = a.rank * b.rank;

  Mat<PolyK> left = kronecker(
      a.connection, poly_ident(p, b.rank), poly_zero(p),
      [](const PolyK& x, const PolyK& y) { return poly_mul(x, y); });
  Mat<PolyK> right = kronecker(
      poly_ident(p, a.rank), b.connection, poly_zero(p),
      [](const PolyK& x, const PolyK& y) { return poly_mul(x, y); });
  m.connection = mat_add(left, right,
                         [](const PolyK& x, const PolyK& y) { return poly_add(x, y); });

  auto rt = [t](const TruncatedSeries& s) { return s.retrunc(t); };
  m.frobenius = kronecker(
      a.frobenius.map(rt), b.frobenius.map(rt), zero_series(p, t),
      [](const TruncatedSeries& x, const TruncatedSeries& y) { return x * y; });

  for (size_t i = 0; i < a.rank; ++i)
    for (size_t j = 0; j < b.rank; ++j) {
      PolyK s = poly_add(a.twists[i], b.twists[j]);
      m.breaks.push_back(poly_deg(s) < 1 ? 0 : poly_deg(s));
      m.twists.push_back(std::move(s));
    }
  return m;
}

SigmaNablaModule direct_sum(const SigmaNablaModule& a, const SigmaNablaModule& b) {
  check_pair(a, b);
  unsigned p = a.p;
  long t = std::min(a.trunc, b.trunc);
  SigmaNablaModule m;
  m.p = p;
  m.q = a.q;
  m.trunc = t;
  m.rank = a.rank + b.rank;
  m.connection = block_diag(a.connection, b.connection, poly_zero(p));
  auto rt = [t](const TruncatedSeries& s) { return s.retrunc(t); };
  m.frobenius =
      block_diag(a.frobenius.map(rt), b.frobenius.map(rt), zero_series(p, t));
  m.twists = a.twists;
  m.twists.insert(m.twists.end(), b.twists.begin(), b.twists.end());
  m.breaks = a.breaks;
  m.breaks.insert(m.breaks.end(), b.breaks.begin(), b.breaks.end());
  return m;
}

SigmaNablaModule dual(const SigmaNablaModule& a) {
  unsigned p = a.p;
  size_t r = a.rank;
  long t = a.trunc;
  SigmaNablaModule m;
  m.p = p;
  m.q = a.q;
  m.trunc = t;
  m.rank = r;
  m.connection = a.connection.transpose().map(
      [](const PolyK& f) { return poly_neg(f); });

  // Invert Phi degree by degree; Phi(0) = I for every module built here.
  std::vector<Mat<PiFieldElem>> phi(static_cast<size_t>(t + 1),
                                    Mat<PiFieldElem>(r, r, PiFieldElem(p)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (long k = 0; k <= t; ++k) phi[k].at(i, j) = a.frobenius.at(i, j).coeff(k);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) {
      bool want_one = i == j;
      const PiFieldElem& c = phi[0].at(i, j);
      if ((want_one && c != PiFieldElem::from_int(p, 1)) || (!want_one && !c.is_zero()))
        throw std::domain_error("dual: Frobenius constant term is not the identity");
    }
  }
  std::vector<Mat<PiFieldElem>> psi(static_cast<size_t>(t + 1),
                                    Mat<PiFieldElem>(r, r, PiFieldElem(p)));
  for (size_t i = 0; i < r; ++i) psi[0].at(i, i) = PiFieldElem::from_int(p, 1);
  for (long k = 1; k <= t; ++k) {
    Mat<PiFieldElem> acc(r, r, PiFieldElem(p));
    for (long j = 1; j <= k; ++j) {
      Mat<PiFieldElem> term = scalar_mat_mul(phi[j], psi[k - j], p);
      acc = mat_add(term, acc,
                    [](const PiFieldElem& x, const PiFieldElem& y) { return x + y; });
    }
    psi[k] = acc.map([](const PiFieldElem& x) { return -x; });
  }

  // Tail certificates for the inverse are measured with the weakest slope
  // present in the source (the inverse of an exponential twist grows the
  // same way as the twist itself).
  Rat slope(0);
  bool have = false;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (a.frobenius.at(i, j).tail()) {
        Rat s = a.frobenius.at(i, j).tail()->slope;
        slope = have ? std::min(slope, s) : s;
        have = true;
      }
  m.frobenius = Mat<TruncatedSeries>(r, r, zero_series(p, t));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      TruncatedSeries s(p, t);
      for (long k = 0; k <= t; ++k) s.coeff(k) = psi[k].at(j, i);
      if (have) certify_tail(s, slope);
      m.frobenius.at(i, j) = s;
    }

  for (const PolyK& f : a.twists) m.twists.push_back(poly_neg(f));
  m.breaks = a.breaks;
  return m;
}

CompatibilityReport check_compatibility(const SigmaNablaModule& m) {
  unsigned p = m.p;
  size_t r = m.rank;
  long t = m.trunc;
  // q x^(q-1) N(x^q), entrywise.
  Mat<PolyK> nq(r, r, poly_zero(p));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      PolyK f = poly_compose_xq(m.connection.at(i, j), m.q);
      PolyK shift(static_cast<size_t>(m.q), PiFieldElem(p));
      shift[m.q - 1] = PiFieldElem::from_int(p, static_cast<long>(m.q));
      nq.at(i, j) = poly_mul(f, shift);
    }

  CompatibilityReport rep;
  rep.window = t - 1;
  rep.ok = true;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      TruncatedSeries res = m.frobenius.at(i, j).derivative();
      for (size_t k = 0; k < r; ++k) {
        res = res + m.frobenius.at(k, j).mul_poly(m.connection.at(i, k)).retrunc(t - 1);
        res = res - m.frobenius.at(i, k).mul_poly(nq.at(k, j)).retrunc(t - 1);
      }
      for (long deg = 0; deg <= t - 1; ++deg) {
        if (res.coeff(deg).is_zero()) continue;
        rep.ok = false;
        if (rep.first_failure < 0 || deg < rep.first_failure) {
          rep.first_failure = deg;
          rep.deficit = res.coeff(deg).valuation();
        }
        break;
      }
    }
  return rep;
}

Mat<TruncatedSeries> horizontal_basis(const SigmaNablaModule& m) {
  unsigned p = m.p;
  size_t r = m.rank;
  long t = m.trunc;
  std::vector<Mat<PiFieldElem>> nc = poly_mat_coeffs(m.connection, p);
  long dn = static_cast<long>(nc.size()) - 1;
  std::vector<Mat<PiFieldElem>> u(static_cast<size_t>(t + 1),
                                  Mat<PiFieldElem>(r, r, PiFieldElem(p)));
  for (size_t i = 0; i < r; ++i) u[0].at(i, i) = PiFieldElem::from_int(p, 1);
  for (long l = 1; l <= t; ++l) {
    Mat<PiFieldElem> acc(r, r, PiFieldElem(p));
    for (long i = 0; i <= std::min(dn, l - 1); ++i) {
      Mat<PiFieldElem> term = scalar_mat_mul(nc[i], u[l - 1 - i], p);
      acc = mat_add(term, acc,
                    [](const PiFieldElem& x, const PiFieldElem& y) { return x + y; });
    }
    Rat inv(-1, l);
    u[l] = acc.map([&inv](const PiFieldElem& x) { return x.mul_monomial(inv, 0); });
  }
  Mat<TruncatedSeries> out(r, r, TruncatedSeries(p, t));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      TruncatedSeries s(p, t);
      for (long k = 0; k <= t; ++k) s.coeff(k) = u[k].at(i, j);
      out.at(i, j) = s;
    }
  return out;
}

PiAdicApprox teichmuller_lift(long a, unsigned p, const Rat& m) {
  long r = a % static_cast<long>(p);
  if (r < 0) r += p;
  if (r == 0) return PiAdicApprox::exact(PiFieldElem(p));
  if (r == 1) return PiAdicApprox::exact(PiFieldElem::from_int(p, 1));
  if (r == static_cast<long>(p) - 1)
    return PiAdicApprox::exact(PiFieldElem::from_int(p, -1));

  // Newton for t^(p-1) - 1 with unit derivative: the error doubles per step.
  Rat t(r);
  Rat e(1);
  while (e < m) {
    Rat tp(1);
    for (unsigned k = 0; k + 2 < p; ++k) tp *= t;  // t^(p-2)
    Rat g = tp * t - 1;
    t -= g / (tp * (static_cast<long>(p) - 1));
    e *= 2;
    unsigned long digits = static_cast<unsigned long>(
        mpz_class(e.get_num() / e.get_den() + 1).get_ui());
    t = Rat(mod_ppow(t, p, digits));
  }
  return PiAdicApprox(PiFieldElem::from_rat(p, t), Val::of(e));
}

Mat<PiAdicApprox> fiber_frobenius(const SigmaNablaModule& m, const PiAdicApprox& t) {
  if (m.q != m.p)
    throw std::domain_error("fiber_frobenius: only q = p fibers are supported");
  for (size_t i = 0; i < m.rank; ++i)
    for (size_t j = 0; j < m.rank; ++j)
      if (!m.frobenius.at(i, j).tail())
        throw std::domain_error(
            "fiber_frobenius: Frobenius entry lacks a tail certificate");
  return m.frobenius.map(
      [&t](const TruncatedSeries& s) { return s.eval(t); });
}

}  // namespace rigidsum
