#pragma once

#include <string>
#include <vector>

#include "rigidsum/rational.hpp"
#include "rigidsum/valuation.hpp"

namespace rigidsum {

// Element of K = Q(pi), pi^(p-1) = -p, stored as exact rational coordinates
// in the basis 1, pi, ..., pi^(p-2).  For p = 2 the field degenerates to Q
// with pi = -2.  The extension is totally ramified: v(pi) = 1/(p-1) with
// v(p) = 1, and the p-1 monomials c_k pi^k of an element have pairwise
// distinct valuations, so v(sum) = min_k (v_p(c_k) + k/(p-1)) exactly.
class PiFieldElem {
 public:
  PiFieldElem() : p_(0) {}  // empty placeholder, unusable in arithmetic
  explicit PiFieldElem(unsigned p) : p_(p), c_(p - 1, Rat(0)) {}

  static PiFieldElem from_rat(unsigned p, const Rat& x);
  static PiFieldElem from_int(unsigned p, long n);
  static PiFieldElem pi(unsigned p) { return pi_pow(p, 1); }
  // pi^k for any integer k (negative powers use pi^-(p-1) = -1/p).
  static PiFieldElem pi_pow(unsigned p, long k);
  // r * pi^k.
  static PiFieldElem monomial(unsigned p, const Rat& r, long k);

  unsigned prime() const { return p_; }
  unsigned degree() const { return p_ - 1; }
  const std::vector<Rat>& coords() const { return c_; }
  const Rat& coord(size_t k) const { return c_[k]; }
  Rat& coord(size_t k) { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;  // all coordinates above pi^0 vanish
  const Rat& rational_part() const { return c_[0]; }

  Val valuation() const;

  PiFieldElem operator-() const;
  PiFieldElem& operator+=(const PiFieldElem& o);
  PiFieldElem& operator-=(const PiFieldElem& o);
  friend PiFieldElem operator+(PiFieldElem a, const PiFieldElem& b) { return a += b; }
  friend PiFieldElem operator-(PiFieldElem a, const PiFieldElem& b) { return a -= b; }
  friend PiFieldElem operator*(const PiFieldElem& a, const PiFieldElem& b);
  friend bool operator==(const PiFieldElem& a, const PiFieldElem& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const PiFieldElem& a, const PiFieldElem& b) { return !(a == b); }

  PiFieldElem& scale(const Rat& r);
  // *this * (r * pi^k): O(p) coordinate operations, no full convolution.
  PiFieldElem mul_monomial(const Rat& r, long k) const;

  PiFieldElem inverse() const;
  friend PiFieldElem operator/(const PiFieldElem& a, const PiFieldElem& b) {
    return a * b.inverse();
  }

  std::string to_string() const;

 private:
  unsigned p_;
  std::vector<Rat> c_;
};

}  // namespace rigidsum
