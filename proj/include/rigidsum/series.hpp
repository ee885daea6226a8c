#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidsum/piadic.hpp"
#include "rigidsum/polyk.hpp"

namespace rigidsum {

// Linear lower bound v(c_i) >= slope*i + offset on series coefficients.
// Construction-time certificates are measured on the stored range (exact
// rational arithmetic); for the discarded tail i > trunc the bound is part of
// the certificate and is reported as conjectural, never silently assumed.
// offset = inf certifies an identically zero tail (vacuous bound on the
// stored range), which structural zero entries of module matrices carry.
struct TailBound {
  Rat slope;
  Val offset;

  Val at(long i) const { return offset + slope * i; }
};

// Power series over K truncated at x-degree trunc (coefficients 0..trunc kept).
class TruncatedSeries {
 public:
  TruncatedSeries() : p_(0), trunc_(-1) {}
  TruncatedSeries(unsigned p, long trunc)
      : p_(p), trunc_(trunc), c_(static_cast<size_t>(trunc + 1), PiFieldElem(p)) {}

  unsigned prime() const { return p_; }
  long trunc() const { return trunc_; }
  const PiFieldElem& coeff(long i) const { return c_[static_cast<size_t>(i)]; }
  PiFieldElem& coeff(long i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<PiFieldElem>& coeffs() const { return c_; }

  const std::optional<TailBound>& tail() const { return tail_; }
  void set_tail(std::optional<TailBound> t) { tail_ = std::move(t); }

  static TruncatedSeries one(unsigned p, long trunc);
  static TruncatedSeries from_poly(const PolyK& f, long trunc);

  bool is_zero() const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  TruncatedSeries scaled(const PiFieldElem& c) const;
  TruncatedSeries mul_xpow(long k) const;  // k >= 0
  TruncatedSeries derivative() const;
  TruncatedSeries mul_poly(const PolyK& f) const;

  // Truncate (or zero-extend) to a new order.
  TruncatedSeries retrunc(long t) const;

  // min over stored nonzero coefficients of v(c_i) - slope*i (the best offset
  // making (slope, offset) valid on the stored range).  Val::inf() if all zero.
  Val measured_offset(const Rat& slope) const;
  // min over stored nonzero coefficients with lo <= i <= hi of v(c_i)/i.
  Val measured_slope(long lo, long hi) const;

  // Sum_{i<=trunc} c_i omega^i in approximate arithmetic; if a tail bound is
  // present the result's known_mod also reflects the discarded tail at omega
  // with v(omega) >= 0.
  PiAdicApprox eval(const PiAdicApprox& omega) const;

  std::string to_string() const;

 private:
  unsigned p_;
  long trunc_;
  std::vector<PiFieldElem> c_;
  std::optional<TailBound> tail_;
};

// exp(f) truncated at order N for a polynomial f with f(0) = 0, computed on
// the exact rational substrate via the derivative recurrence
//   (i+1) e_{i+1} = sum_j (j f_j) e_{i+1-j},
// which is the coefficientwise form of (exp f)' = f' exp f.  Carries no tail
// bound; callers certify one with certify_tail where theory provides a slope.
TruncatedSeries exp_poly(const PolyK& f, long trunc);

// Attach the certificate (slope, measured offset) to s.  The offset is the
// exact minimum of v(c_i) - slope*i over stored nonzero coefficients, so the
// bound is verified on the stored range and conjectural for the tail.
void certify_tail(TruncatedSeries& s, const Rat& slope);

// f(x^q) truncated at the same order.
TruncatedSeries frobenius_substitute(const TruncatedSeries& f, unsigned q);

// Finite Laurent fragment, exponents in [-trunc, trunc].
class LaurentFragment {
 public:
  explicit LaurentFragment(unsigned p) : p_(p) {}
  unsigned prime() const { return p_; }
  void set(long n, PiFieldElem c);
  const std::map<long, PiFieldElem>& terms() const { return c_; }

 private:
  unsigned p_;
  std::map<long, PiFieldElem> c_;
};

// w_r(x) = min_n (v(c_n) + r*n): the r-Gauss valuation of the fragment.
Val w_r(const LaurentFragment& f, const Rat& r);

}  // namespace rigidsum
