#include "rigidsum/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace rigidsum {

namespace {

// Common twist degree, after validating the shape h1_reduce relies on.
long uniform_degree(const SigmaNablaModule& m) {
  if (m.rank == 0 || m.breaks.size() != m.rank)
    throw std::invalid_argument("h1: malformed module");
  long d = m.breaks[0];
  for (long b : m.breaks)
    if (b != d) throw std::invalid_argument("h1: mixed twist degrees");
  if (d < 1) throw std::invalid_argument("h1: trivial summand has no H^1 basis");
  if (d % m.p == 0)
    throw std::invalid_argument("h1: twist degree divisible by p");
  for (size_t i = 0; i < m.rank; ++i)
    for (size_t j = 0; j < m.rank; ++j) {
      const PolyK& n = m.connection.at(i, j);
      if (i != j) {
        if (!poly_is_zero(n))
          throw std::invalid_argument("h1: connection is not diagonal");
      } else {
        if (poly_deg(n) != d - 1 || poly_leading(n).is_zero())
          throw std::invalid_argument("h1: connection degree does not match break");
      }
    }
  return d;
}

PiAdicApprox weakened(const PiFieldElem& v, const Rat& work) {
  return PiAdicApprox(v, Val::of(work)).compressed();
}

Mat<PiAdicApprox> approx_mat_mul(const Mat<PiAdicApprox>& a,
                                 const Mat<PiAdicApprox>& b, unsigned p) {
  Mat<PiAdicApprox> c = mat_mul(
      a, b, PiAdicApprox::zero(p),
      [](const PiAdicApprox& x, const PiAdicApprox& y) { return x + y; },
      [](const PiAdicApprox& x, const PiAdicApprox& y) { return x * y; });
  return c.map([](const PiAdicApprox& x) { return x.compressed(); });
}

PiFieldElem rat_qpow(unsigned p, uint64_t q, long e) {
  Rat v;
  if (e >= 0)
    v = Rat(int_pow(q, static_cast<unsigned long>(e)));
  else
    v = Rat(1) / Rat(int_pow(q, static_cast<unsigned long>(-e)));
  return PiFieldElem::from_rat(p, v);
}

}  // namespace

size_t h1_dim(const SigmaNablaModule& m) {
  long d = uniform_degree(m);
  return m.rank * static_cast<size_t>(d - 1);
}

std::vector<PiAdicApprox> h1_reduce(const SigmaNablaModule& m,
                                    const std::vector<TruncatedSeries>& form,
                                    const Rat& work) {
  unsigned p = m.p;
  long d = uniform_degree(m);
  size_t dim = m.rank * static_cast<size_t>(d - 1);
  if (form.size() != m.rank)
    throw std::invalid_argument("h1_reduce: wrong number of components");
  std::vector<PiAdicApprox> out(dim, PiAdicApprox::zero(p));

  for (size_t k = 0; k < m.rank; ++k) {
    const PolyK& n = m.connection.at(k, k);
    PiFieldElem lead = poly_leading(n);
    long top = form[k].trunc();
    std::vector<PiAdicApprox> c(static_cast<size_t>(top + 1));
    for (long i = 0; i <= top; ++i) c[i] = weakened(form[k].coeff(i), work);

    // nabla(x^s e_k) = (s x^(s-1) + N_kk x^s) e_k dx kills the top term.
    for (long mdeg = top; mdeg >= d - 1; --mdeg) {
      PiAdicApprox r = c[mdeg].div_exact(lead);
      if (r.value().is_zero() && r.is_exact()) continue;
      long s = mdeg - d + 1;
      for (long t = 0; t + 1 <= d - 1; ++t) {
        if (n[t].is_zero()) continue;
        c[s + t] = (c[s + t] - r.scaled(n[t])).compressed();
      }
      if (s >= 1)
        c[s - 1] =
            (c[s - 1] - r.scaled(PiFieldElem::from_int(p, s))).compressed();
    }
    for (long i = 0; i <= std::min<long>(d - 2, top); ++i)
      out[k * static_cast<size_t>(d - 1) + static_cast<size_t>(i)] =
          c[i].compressed();
  }
  return out;
}

Mat<PiAdicApprox> frobenius_on_h1(const SigmaNablaModule& m, const Rat& work) {
  unsigned p = m.p;
  long d = uniform_degree(m);
  size_t cols = m.rank * static_cast<size_t>(d - 1);
  // The downward reduction amplifies compression noise (each step divides by
  // the pi-valued leading connection coefficient), so the internal floor
  // sits a full truncation order below the requested budget.
  Rat guard = work + m.trunc;
  Mat<PiAdicApprox> out(cols, cols, PiAdicApprox::zero(p));
  PiFieldElem qc = PiFieldElem::from_int(p, static_cast<long>(m.q));
  for (size_t j = 0; j < m.rank; ++j)
    for (long i = 0; i + 1 <= d - 1; ++i) {
      long shift = static_cast<long>(m.q) * i + static_cast<long>(m.q) - 1;
      std::vector<TruncatedSeries> form;
      form.reserve(m.rank);
      for (size_t k = 0; k < m.rank; ++k)
        form.push_back(m.frobenius.at(k, j)
                           .retrunc(m.trunc + shift)
                           .mul_xpow(shift)
                           .scaled(qc));
      std::vector<PiAdicApprox> red = h1_reduce(m, form, guard);
      size_t b = j * static_cast<size_t>(d - 1) + static_cast<size_t>(i);
      for (size_t row = 0; row < cols; ++row) out.at(row, b) = red[row];
    }
  return out;
}

Mat<PiAdicApprox> frobenius_on_h1_certified(
    const std::function<SigmaNablaModule(long)>& builder, long trunc, long bump,
    const Rat& work) {
  Mat<PiAdicApprox> f1 = frobenius_on_h1(builder(trunc), work);
  Mat<PiAdicApprox> f2 = frobenius_on_h1(builder(trunc + bump), work);
  if (f1.rows() != f2.rows())
    throw std::domain_error("frobenius_on_h1_certified: dimension changed");
  Mat<PiAdicApprox> out = f2;
  for (size_t i = 0; i < out.rows(); ++i)
    for (size_t j = 0; j < out.cols(); ++j) {
      Val agree = agreement_valuation(f1.at(i, j), f2.at(i, j));
      out.at(i, j) = PiAdicApprox(f2.at(i, j).value(), agree).compressed();
    }
  return out;
}

long suggested_trunc(unsigned p, unsigned q, long d, const Rat& target) {
  Rat need = target * p * p * d / (static_cast<long>(p) - 1);
  Int ceiled;
  mpz_cdiv_q(ceiled.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
  return ceiled.get_si() + d * static_cast<long>(q) + 32;
}

CharPoly char_poly(const Mat<PiAdicApprox>& f, unsigned p, uint64_t q) {
  size_t dim = f.rows();
  if (f.cols() != dim) throw std::invalid_argument("char_poly: square input");
  CharPoly cp;
  cp.p = p;
  cp.q = q;
  // Power traces tr(F^k), then Newton's identities for the elementary
  // symmetric functions; det(1 - tF) has coefficients (-1)^k e_k.
  std::vector<PiAdicApprox> tr;
  Mat<PiAdicApprox> pw = f;
  for (size_t k = 1; k <= dim; ++k) {
    PiAdicApprox t = PiAdicApprox::zero(p);
    for (size_t i = 0; i < dim; ++i) t = t + pw.at(i, i);
    tr.push_back(t.compressed());
    if (k < dim) pw = approx_mat_mul(pw, f, p);
  }
  std::vector<PiAdicApprox> e(dim + 1, PiAdicApprox::zero(p));
  e[0] = PiAdicApprox::exact(PiFieldElem::from_int(p, 1));
  for (size_t k = 1; k <= dim; ++k) {
    PiAdicApprox acc = PiAdicApprox::zero(p);
    for (size_t i = 1; i <= k; ++i) {
      PiAdicApprox term = e[k - i] * tr[i - 1];
      if (i % 2 == 0) term = -term;
      acc = acc + term;
    }
    e[k] = acc.div_exact(PiFieldElem::from_int(p, static_cast<long>(k)))
               .compressed();
  }
  cp.coeffs.resize(dim + 1);
  for (size_t k = 0; k <= dim; ++k) {
    cp.coeffs[k] = k % 2 == 0 ? e[k] : -e[k];
  }
  return cp;
}

bool identify_with_oracle(CharPoly& cp, const std::vector<CycloElem>& oracle_h1,
                          const Rat& threshold) {
  if (oracle_h1.size() != cp.coeffs.size()) return false;
  PiAdicApprox zeta = hensel_zeta_p(cp.p, threshold + 24);
  for (size_t k = 0; k < cp.coeffs.size(); ++k) {
    PiAdicApprox cand = embed_cyclo(oracle_h1[k], zeta);
    if (!(agreement_valuation(cp.coeffs[k], cand) >= threshold)) return false;
  }
  cp.exact = oracle_h1;
  return true;
}

CharPoly h1c_via_duality(const CharPoly& h1) {
  unsigned D = h1.degree();
  const PiAdicApprox& cd = h1.coeffs[D];
  if (D > 0 && !cd.certified_nonzero())
    throw std::domain_error("h1c_via_duality: top coefficient not certified");
  CharPoly out;
  out.p = h1.p;
  out.q = h1.q;
  out.tate_twist = h1.tate_twist;
  out.coeffs.resize(D + 1);
  out.coeffs[0] = PiAdicApprox::exact(PiFieldElem::from_int(h1.p, 1));
  for (unsigned k = 1; k <= D; ++k) {
    PiAdicApprox num =
        h1.coeffs[D - k].scaled(rat_qpow(h1.p, h1.q, static_cast<long>(k)));
    out.coeffs[k] = (num / cd).compressed();
  }
  if (h1.exact) {
    std::vector<CycloElem> e(D + 1, CycloElem(h1.p));
    const std::vector<CycloElem>& src = *h1.exact;
    for (unsigned k = 0; k <= D; ++k) {
      CycloElem c = src[D - k];
      c.scale(Rat(int_pow(h1.q, k)));
      e[k] = c / src[D];
    }
    out.exact = std::move(e);
  }
  return out;
}

CharPoly tate_twist(const CharPoly& cp, long i) {
  CharPoly out = cp;
  out.tate_twist += i;
  for (size_t k = 1; k < out.coeffs.size(); ++k)
    out.coeffs[k] =
        out.coeffs[k].scaled(rat_qpow(cp.p, cp.q, i * static_cast<long>(k)));
  if (out.exact) {
    for (size_t k = 1; k < out.exact->size(); ++k) {
      long e = i * static_cast<long>(k);
      Rat s = e >= 0 ? Rat(int_pow(cp.q, static_cast<unsigned long>(e)))
                     : Rat(1) / Rat(int_pow(cp.q, static_cast<unsigned long>(-e)));
      (*out.exact)[k].scale(s);
    }
  }
  return out;
}

SwanPrediction swan_predict(const SigmaNablaModule& m) {
  SwanPrediction s;
  s.rank = m.rank;
  s.breaks = m.breaks;
  for (long b : m.breaks) {
    if (b < 1)
      throw std::domain_error("swan_predict: trivial summand (break 0)");
    if (b % m.p == 0)
      throw std::domain_error("swan_predict: break divisible by p is wild");
    s.swan += b;
  }
  s.chi = static_cast<long>(m.rank) - s.swan;
  s.dim_h1 = static_cast<size_t>(s.swan - static_cast<long>(m.rank));
  return s;
}

std::vector<PiAdicApprox> inverse_root_power_sums(const CharPoly& cp, unsigned n) {
  unsigned p = cp.p;
  unsigned D = cp.degree();
  std::vector<PiAdicApprox> ps;
  for (unsigned k = 1; k <= n; ++k) {
    PiAdicApprox acc = PiAdicApprox::zero(p);
    if (k <= D)
      acc = -cp.coeffs[k].scaled(PiFieldElem::from_int(p, static_cast<long>(k)));
    for (unsigned i = 1; i < k && i <= D; ++i)
      acc = acc - cp.coeffs[i] * ps[k - i - 1];
    ps.push_back(acc.compressed());
  }
  return ps;
}

Val lefschetz_verify(const CharPoly& h1c, size_t trivial_summands,
                     const SumSeries& sums, unsigned n_max) {
  if (sums.values.size() < n_max)
    throw std::invalid_argument("lefschetz_verify: not enough oracle sums");
  unsigned p = h1c.p;
  std::vector<PiAdicApprox> ps = inverse_root_power_sums(h1c, n_max);
  PiAdicApprox zeta = hensel_zeta_p(p, Rat(40));
  Val worst = Val::inf();
  for (unsigned n = 1; n <= n_max; ++n) {
    PiAdicApprox coh = -ps[n - 1];
    if (trivial_summands > 0) {
      Rat h2 = Rat(trivial_summands) * Rat(int_pow(h1c.q, n));
      coh = coh + PiAdicApprox::exact(PiFieldElem::from_rat(p, h2));
    }
    PiAdicApprox orc = embed_cyclo(sums.values[n - 1], zeta);
    worst = min(worst, agreement_valuation(coh, orc));
  }
  return worst;
}

std::vector<Rat> newton_slopes(const CharPoly& cp) {
  unsigned D = cp.degree();
  // Certified vertices (k, v(c_k)); exact zeros are at +inf and drop out.
  std::vector<std::pair<long, Rat>> pts;
  std::vector<std::pair<long, Rat>> uncertain;  // (k, known_mod)
  for (unsigned k = 0; k <= D; ++k) {
    const PiAdicApprox& c = cp.coeffs[k];
    if (c.certified_nonzero() || (c.is_exact() && !c.value().is_zero())) {
      pts.emplace_back(k, c.valuation().value());
    } else if (!c.is_exact()) {
      uncertain.emplace_back(k, c.known_mod().value());
    }
  }
  if (pts.empty() || pts.front().first != 0 || pts.back().first != static_cast<long>(D))
    throw std::domain_error("newton_slopes: endpoints not certified");

  // Lower convex hull, left to right.
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Drop b if it lies on or above segment a-pt.
      if ((b.second - a.second) * (pt.first - a.first) >=
          (pt.second - a.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  auto hull_at = [&hull](long k) {
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
      if (k < hull[i].first || k > hull[i + 1].first) continue;
      Rat t(k - hull[i].first, hull[i + 1].first - hull[i].first);
      t.canonicalize();
      return Rat(hull[i].second + t * (hull[i + 1].second - hull[i].second));
    }
    return hull.back().second;
  };
  for (const auto& [k, known] : uncertain)
    if (known < hull_at(k))
      throw std::domain_error("newton_slopes: uncertain coefficient below hull");

  std::vector<Rat> slopes;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    Rat s = (hull[i + 1].second - hull[i].second) /
            Rat(hull[i + 1].first - hull[i].first);
    for (long j = 0; j < hull[i + 1].first - hull[i].first; ++j) slopes.push_back(s);
  }
  return slopes;
}

WeightReport weight_check(const CharPoly& cp, const Rat& w, double tol) {
  WeightReport rep;
  if (!cp.exact) return rep;
  unsigned D = cp.degree();
  double target = std::pow(static_cast<double>(cp.q), w.get_d() / 2.0);
  if (D == 0) {
    rep.ok = true;
    return rep;
  }
  std::vector<std::vector<std::complex<double>>> emb_of(D + 1);
  for (unsigned k = 0; k <= D; ++k) emb_of[k] = complex_embeddings((*cp.exact)[k]);
  double worst = 0.0;
  for (unsigned emb = 0; emb + 1 < cp.p; ++emb) {
    std::vector<std::complex<double>> c(D + 1);
    for (unsigned k = 0; k <= D; ++k) c[k] = emb_of[k][emb];
    if (std::abs(c[D]) < 1e-9) return rep;  // degree drop: fail
    // Durand-Kerner on the monic normalization.
    std::vector<std::complex<double>> a(D + 1);
    for (unsigned k = 0; k <= D; ++k) a[k] = c[k] / c[D];
    std::vector<std::complex<double>> z(D);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> zp(1.0, 0.0);
    for (unsigned i = 0; i < D; ++i) {
      zp *= seed;
      z[i] = zp;
    }
    for (int iter = 0; iter < 500; ++iter) {
      double moved = 0.0;
      for (unsigned i = 0; i < D; ++i) {
        std::complex<double> val(0.0, 0.0);
        for (long k = static_cast<long>(D); k >= 0; --k) val = val * z[i] + a[k];
        std::complex<double> den(1.0, 0.0);
        for (unsigned j = 0; j < D; ++j)
          if (j != i) den *= z[i] - z[j];
        std::complex<double> step = val / den;
        z[i] -= step;
        moved = std::max(moved, std::abs(step));
      }
      if (moved < 1e-14) break;
    }
    for (unsigned i = 0; i < D; ++i) {
      double alpha = 1.0 / std::abs(z[i]);
      worst = std::max(worst, std::abs(alpha - target));
    }
  }
  rep.worst_deviation = worst;
  rep.ok = worst <= tol * target;
  return rep;
}

}  // namespace rigidsum
