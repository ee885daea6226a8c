#include "rigidsum/oracle.hpp"

#include <stdexcept>

namespace rigidsum {

namespace {

CycloElem sum_from_trace_counts(const std::vector<uint64_t>& count, unsigned p) {
  CycloElem s(p);
  for (unsigned t = 0; t < p; ++t) {
    if (count[t] == 0) continue;
    CycloElem z = CycloElem::zeta_pow(p, t);
    z.scale(Rat(Int(count[t])));
    s += z;
  }
  return s;
}

}  // namespace

CycloElem char_sum(const std::vector<long>& P, unsigned p, unsigned n,
                   bool reversed_order) {
  FFContext ctx(p, n);
  if (ctx.size() > kEnumerationBudget)
    throw std::domain_error("char_sum: enumeration budget exceeded");
  uint32_t nn = ctx.n();
  // Reduce coefficients mod p once.
  std::vector<uint32_t> a(P.size());
  for (size_t k = 0; k < P.size(); ++k) {
    long r = P[k] % static_cast<long>(p);
    if (r < 0) r += p;
    a[k] = static_cast<uint32_t>(r);
  }
  std::vector<uint64_t> count(p, 0);
  std::vector<uint32_t> x(nn, 0), acc(nn), tmp(nn);
  for (uint64_t idx = 0; idx < ctx.size(); ++idx) {
    uint64_t e = reversed_order ? ctx.size() - 1 - idx : idx;
    ctx.decode(e, x.data());
    // Horner over the field; coefficients are prime-field constants.
    std::fill(acc.begin(), acc.end(), 0);
    for (size_t k = a.size(); k-- > 0;) {
      ctx.mul(acc.data(), x.data(), tmp.data());
      tmp[0] = (tmp[0] + a[k]) % p;
      std::swap(acc, tmp);
    }
    ++count[ctx.trace(acc.data())];
  }
  return sum_from_trace_counts(count, p);
}

CycloElem char_sum_ext(const FFContext& ctx, const std::vector<FFElem>& P) {
  if (ctx.size() > kEnumerationBudget)
    throw std::domain_error("char_sum_ext: enumeration budget exceeded");
  unsigned p = ctx.p();
  uint32_t nn = ctx.n();
  std::vector<uint64_t> count(p, 0);
  std::vector<uint32_t> x(nn, 0), acc(nn), tmp(nn);
  for (uint64_t idx = 0; idx < ctx.size(); ++idx) {
    ctx.decode(idx, x.data());
    std::fill(acc.begin(), acc.end(), 0);
    for (size_t k = P.size(); k-- > 0;) {
      ctx.mul(acc.data(), x.data(), tmp.data());
      ctx.add(tmp.data(), P[k].coords().data(), acc.data());
    }
    ++count[ctx.trace(acc.data())];
  }
  return sum_from_trace_counts(count, p);
}

SumSeries sum_series(const std::vector<long>& P, unsigned p, unsigned n_max) {
  SumSeries s;
  s.p = p;
  s.q = p;
  s.twist = P;
  for (unsigned n = 1; n <= n_max; ++n) s.values.push_back(char_sum(P, p, n));
  return s;
}

LPolynomial l_poly_from_sums(const std::vector<CycloElem>& sums, unsigned p,
                             uint64_t q, unsigned expected_degree) {
  if (sums.size() < expected_degree)
    throw std::invalid_argument("l_poly_from_sums: need sums up to the degree");
  unsigned D = static_cast<unsigned>(sums.size());
  // exp(sum S_n t^n / n) coefficientwise:
  // (i+1) l_{i+1} = sum_{n=1}^{i+1} S_n l_{i+1-n}.
  std::vector<CycloElem> l(D + 1, CycloElem(p));
  l[0] = CycloElem::from_int(p, 1);
  for (unsigned i = 0; i < D; ++i) {
    CycloElem acc(p);
    for (unsigned n = 1; n <= i + 1; ++n) acc += sums[n - 1] * l[i + 1 - n];
    acc.scale(Rat(1, static_cast<long>(i) + 1));
    l[i + 1] = acc;
  }
  LPolynomial out;
  out.p = p;
  out.q = q;
  out.consistency_checked_to = D;
  out.consistent = true;
  for (unsigned k = expected_degree + 1; k <= D; ++k)
    if (!l[k].is_zero()) out.consistent = false;
  out.h1.assign(l.begin(), l.begin() + expected_degree + 1);
  out.degree = 0;
  for (unsigned k = 0; k <= expected_degree; ++k)
    if (!out.h1[k].is_zero()) out.degree = k;
  out.integral = true;
  for (const auto& c : out.h1)
    if (!c.is_integral()) out.integral = false;
  return out;
}

}  // namespace rigidsum
