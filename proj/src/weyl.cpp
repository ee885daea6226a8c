#include "rigidsum/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace rigidsum {

namespace {

Rat binom(long n, long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

void add_term(WeylOperator& op, long i, long j, const PiFieldElem& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = op.terms.find(key);
  if (it == op.terms.end()) {
    op.terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) op.terms.erase(it);
  }
}

}  // namespace

WeylOperator WeylOperator::monomial(unsigned p, long i, long j,
                                    const PiFieldElem& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("weyl: negative exponent");
  WeylOperator op{p, {}};
  add_term(op, i, j, c);
  return op;
}

WeylOperator operator+(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator r = a;
  for (const auto& [key, c] : b.terms) add_term(r, key.first, key.second, c);
  return r;
}

WeylOperator operator-(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator r = a;
  for (const auto& [key, c] : b.terms) add_term(r, key.first, key.second, -c);
  return r;
}

// dd^n x^m = sum_s C(n,s) C(m,s) s! pi^-s x^(m-s) dd^(n-s).
WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator r{a.p, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      PiFieldElem c = ca * cb;
      long n = ka.second, m = kb.first;
      for (long s = 0; s <= std::min(n, m); ++s) {
        Rat f = binom(n, s) * binom(m, s) * Rat(factorial(s));
        add_term(r, ka.first + m - s, n - s + kb.second, c.mul_monomial(f, -s));
      }
    }
  return r;
}

bool operator==(const WeylOperator& a, const WeylOperator& b) {
  return a.terms == b.terms;
}

WeylOperator normal_form(unsigned p, const std::string& word) {
  WeylOperator op = WeylOperator::one(p);
  PiFieldElem one = PiFieldElem::from_int(p, 1);
  for (char ch : word) {
    if (ch == 'x')
      op = op * WeylOperator::monomial(p, 1, 0, one);
    else if (ch == 'd')
      op = op * WeylOperator::monomial(p, 0, 1, one);
    else
      throw std::invalid_argument("normal_form: letters are 'x' and 'd'");
  }
  return op;
}

// rho(x^i dd^j) = (-1)^j dd^i x^j, then normal order.
WeylOperator rho(const WeylOperator& op) {
  WeylOperator r{op.p, {}};
  for (const auto& [key, c] : op.terms) {
    long i = key.first, j = key.second;
    PiFieldElem base = j % 2 == 0 ? c : -c;
    for (long s = 0; s <= std::min(i, j); ++s) {
      Rat f = binom(i, s) * binom(j, s) * Rat(factorial(s));
      add_term(r, j - s, i - s, base.mul_monomial(f, -s));
    }
  }
  return r;
}

PolyK weyl_act(const WeylOperator& op, const PolyK& n, const PolyK& v) {
  unsigned p = op.p;
  PiFieldElem piinv = PiFieldElem::pi_pow(p, -1);
  long jmax = 0;
  for (const auto& [key, c] : op.terms) jmax = std::max(jmax, key.second);
  std::vector<PolyK> dv;  // dv[j] = ((1/pi)(d/dx + n))^j v
  dv.push_back(v);
  for (long j = 1; j <= jmax; ++j) {
    PolyK next = poly_add(poly_derivative(dv.back()), poly_mul(n, dv.back()));
    dv.push_back(poly_scale(std::move(next), piinv));
  }
  PolyK out = poly_zero(p);
  for (const auto& [key, c] : op.terms) {
    PolyK t = poly_scale(dv[static_cast<size_t>(key.second)], c);
    t.insert(t.begin(), static_cast<size_t>(key.first), PiFieldElem(p));
    out = poly_add(out, t);
  }
  return poly_trim(out);
}

TruncatedSeries frobenius_commutation_series(unsigned p, unsigned q,
                                             long trunc) {
  PolyK arg(static_cast<size_t>(q) + 1, PiFieldElem(p));
  arg[1] = PiFieldElem::monomial(p, Rat(-1), 1);
  arg[q] = PiFieldElem::pi(p);
  return exp_poly(arg, trunc);
}

FourierFiber fourier_fiber(const std::vector<long>& P, long a, unsigned p,
                           const Rat& target) {
  if (P.size() < 3 || P[0] != 0)
    throw std::invalid_argument("fourier_fiber: twist must vanish at 0");
  long d = static_cast<long>(P.size()) - 1;
  long an = ((a % static_cast<long>(p)) + p) % p;
  Rat work = target + 16;
  long n = suggested_trunc(p, p, d, target);
  long bump = std::max<long>(16, d * static_cast<long>(p) / 2);

  auto run = [&](const Rat& lift) {
    auto builder = [&](long t) {
      PolyK twist = poly_from_ints(p, P);
      twist[1] += PiFieldElem::from_rat(p, lift);
      return make_dwork_module(twist, p, t);
    };
    return frobenius_on_h1_certified(builder, n, bump, work);
  };

  FourierFiber out;
  out.a = an;
  Mat<PiAdicApprox> f;
  if (an == 0 || an == 1 || an == static_cast<long>(p) - 1) {
    f = run(an == static_cast<long>(p) - 1 ? Rat(-1) : Rat(an));
  } else {
    Rat m1 = work + 8;
    PiAdicApprox l1 = teichmuller_lift(an, p, m1);
    PiAdicApprox l2 = teichmuller_lift(an, p, m1 + 8);
    Mat<PiAdicApprox> f1 = run(l1.value().rational_part());
    f = run(l2.value().rational_part());
    for (size_t i = 0; i < f.rows(); ++i)
      for (size_t j = 0; j < f.cols(); ++j) {
        Val agree = agreement_valuation(f1.at(i, j), f.at(i, j));
        out.lift_agreement = min(out.lift_agreement, agree);
        f.at(i, j) = PiAdicApprox(f.at(i, j).value(), agree).compressed();
      }
  }
  out.dim = f.rows();
  out.cp = char_poly(f, p, p);

  std::vector<long> pa = P;
  pa[1] += an;
  SumSeries ss = sum_series(pa, p, static_cast<unsigned>(out.dim) + 2);
  LPolynomial lp =
      l_poly_from_sums(ss.values, p, p, static_cast<unsigned>(out.dim));
  out.identified = lp.consistent && identify_with_oracle(out.cp, lp.h1, Rat(8));
  return out;
}

ProbeResult fourier_surjectivity_probe(unsigned p, const PolyK& n,
                                       const std::vector<PolyK>& v) {
  if (v.empty()) throw std::invalid_argument("probe: empty input");
  PiFieldElem piinv = PiFieldElem::pi_pow(p, -1);
  auto twisted_d = [&](const PolyK& f) {
    return poly_add(poly_derivative(f), poly_mul(n, f));
  };
  ProbeResult out;
  size_t m = v.size() - 1;
  out.w.assign(m, poly_zero(p));
  for (size_t i = m; i >= 1; --i) {
    PolyK rhs = v[i];
    if (i < m) rhs = poly_sub(rhs, twisted_d(out.w[i]));
    out.w[i - 1] = poly_scale(std::move(rhs), piinv);
  }
  out.residual = m == 0 ? v[0] : poly_sub(v[0], twisted_d(out.w[0]));
  poly_trim(out.residual);
  return out;
}

}  // namespace rigidsum
