#include "rigidsum/series.hpp"

#include <sstream>
#include <stdexcept>

namespace rigidsum {

namespace {

void check_same(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.prime() != b.prime() || a.prime() == 0)
    throw std::invalid_argument("TruncatedSeries: mismatched prime");
}

std::optional<TailBound> tail_add(const std::optional<TailBound>& a,
                                  const std::optional<TailBound>& b) {
  if (!a || !b) return std::nullopt;
  return TailBound{std::min(a->slope, b->slope), std::min(a->offset, b->offset)};
}

std::optional<TailBound> tail_mul(const std::optional<TailBound>& a,
                                  const std::optional<TailBound>& b) {
  if (!a || !b) return std::nullopt;
  // v(sum_i a_i b_{m-i}) >= min_i (s1 i + o1 + s2 (m-i) + o2)
  //                      >= min(s1, s2) m + o1 + o2.
  return TailBound{std::min(a->slope, b->slope), a->offset + b->offset};
}

}  // namespace

TruncatedSeries TruncatedSeries::one(unsigned p, long trunc) {
  TruncatedSeries s(p, trunc);
  s.c_[0] = PiFieldElem::from_int(p, 1);
  return s;
}

TruncatedSeries TruncatedSeries::from_poly(const PolyK& f, long trunc) {
  unsigned p = f.empty() ? 0 : f[0].prime();
  TruncatedSeries s(p, trunc);
  for (size_t i = 0; i < f.size() && static_cast<long>(i) <= trunc; ++i) s.c_[i] = f[i];
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same(a, b);
  long t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries r(a.p_, t);
  for (long i = 0; i <= t; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  r.tail_ = tail_add(a.tail_, b.tail_);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same(a, b);
  long t = std::min(a.trunc_, b.trunc_);
  TruncatedSeries r(a.p_, t);
  for (long i = 0; i <= t; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long j = 0; i + j <= t; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.tail_ = tail_mul(a.tail_, b.tail_);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const PiFieldElem& c) const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x = x * c;
  if (r.tail_) r.tail_->offset = r.tail_->offset + c.valuation();
  return r;
}

TruncatedSeries TruncatedSeries::mul_xpow(long k) const {
  if (k < 0) throw std::invalid_argument("mul_xpow: negative shift");
  TruncatedSeries r(p_, trunc_);
  for (long i = 0; i + k <= trunc_; ++i) r.c_[i + k] = c_[i];
  if (tail_) r.tail_ = TailBound{tail_->slope, tail_->offset - tail_->slope * k};
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(p_, trunc_ - 1);
  for (long i = 0; i + 1 <= trunc_; ++i)
    r.c_[i] = c_[i + 1].mul_monomial(Rat(i + 1), 0);
  if (tail_) r.tail_ = TailBound{tail_->slope, tail_->offset + tail_->slope};
  return r;
}

TruncatedSeries TruncatedSeries::mul_poly(const PolyK& f) const {
  TruncatedSeries r(p_, trunc_);
  long df = poly_deg(f);
  for (long j = 0; j <= df; ++j) {
    if (f[j].is_zero()) continue;
    for (long i = 0; i + j <= trunc_; ++i) {
      if (c_[i].is_zero()) continue;
      r.c_[i + j] += c_[i] * f[j];
    }
  }
  // A polynomial factor of degree df and coefficient valuation >= vf shifts a
  // tail bound like a single monomial of the worst kind.
  if (tail_) {
    Val vf = Val::inf();
    for (long j = 0; j <= df; ++j)
      if (!f[j].is_zero()) vf = min(vf, f[j].valuation());
    r.tail_ = TailBound{tail_->slope, (tail_->offset - tail_->slope * df) + vf};
  }
  return r;
}

TruncatedSeries TruncatedSeries::retrunc(long t) const {
  TruncatedSeries r(p_, t);
  for (long i = 0; i <= std::min(t, trunc_); ++i) r.c_[i] = c_[i];
  r.tail_ = tail_;
  return r;
}

Val TruncatedSeries::measured_offset(const Rat& slope) const {
  Val best = Val::inf();
  for (long i = 0; i <= trunc_; ++i) {
    if (c_[i].is_zero()) continue;
    best = min(best, Val::of(c_[i].valuation().value() - slope * i));
  }
  return best;
}

Val TruncatedSeries::measured_slope(long lo, long hi) const {
  Val best = Val::inf();
  for (long i = std::max(lo, 1L); i <= std::min(hi, trunc_); ++i) {
    if (c_[i].is_zero()) continue;
    best = min(best, Val::of(c_[i].valuation().value() / i));
  }
  return best;
}

PiAdicApprox TruncatedSeries::eval(const PiAdicApprox& omega) const {
  if (!omega.value().is_zero() && omega.valuation() < Rat(0))
    throw std::domain_error("TruncatedSeries::eval: point must be integral");
  PiAdicApprox acc = PiAdicApprox::zero(p_);
  for (long i = trunc_; i >= 0; --i) {
    acc = acc * omega;
    acc = acc + PiAdicApprox::exact(c_[i]);
    acc = acc.compressed();
  }
  if (tail_) {
    // Discarded coefficients have v >= slope*(trunc+1) + offset and are
    // evaluated at v(omega) >= 0.
    acc.weaken(tail_->at(trunc_ + 1));
  }
  return acc;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= trunc_ && i <= 12; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].to_string() << ")";
    if (i >= 1) os << "*x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(x^" << trunc_ + 1 << ")";
  return os.str();
}

TruncatedSeries exp_poly(const PolyK& f, long trunc) {
  unsigned p = f.empty() ? 0 : f[0].prime();
  if (p == 0) throw std::invalid_argument("exp_poly: empty polynomial");
  if (!f[0].is_zero())
    throw std::invalid_argument("exp_poly: constant term must vanish");
  long df = poly_deg(f);
  TruncatedSeries e = TruncatedSeries::one(p, trunc);
  for (long i = 0; i < trunc; ++i) {
    PiFieldElem acc(p);
    for (long j = 1; j <= df && j <= i + 1; ++j) {
      if (f[j].is_zero()) continue;
      acc += f[j].mul_monomial(Rat(j), 0) * e.coeff(i + 1 - j);
    }
    e.coeff(i + 1) = acc.mul_monomial(Rat(1, i + 1), 0);
  }
  return e;
}

void certify_tail(TruncatedSeries& s, const Rat& slope) {
  s.set_tail(TailBound{slope, s.measured_offset(slope)});
}

TruncatedSeries frobenius_substitute(const TruncatedSeries& f, unsigned q) {
  TruncatedSeries r(f.prime(), f.trunc());
  for (long i = 0; static_cast<long>(i) * q <= f.trunc(); ++i)
    r.coeff(i * q) = f.coeff(i);
  if (f.tail()) {
    // coefficient at qi is c_i with v >= s*i + o = (s/q)(qi) + o
    r.set_tail(TailBound{f.tail()->slope / q, f.tail()->offset});
  }
  return r;
}

void LaurentFragment::set(long n, PiFieldElem c) {
  if (c.is_zero())
    c_.erase(n);
  else
    c_[n] = std::move(c);
}

Val w_r(const LaurentFragment& f, const Rat& r) {
  Val best = Val::inf();
  for (const auto& [n, c] : f.terms())
    best = min(best, Val::of(c.valuation().value() + r * n));
  return best;
}

}  // namespace rigidsum
