#pragma once

#include "rigidsum/pifield.hpp"
#include "rigidsum/valuation.hpp"

namespace rigidsum {

// Finite-precision view of a PiFieldElem: the stored value is exact, but the
// element it represents is only determined modulo {valuation >= known_mod}.
// Arithmetic propagates known_mod by worst-case valuation accounting; exact
// elements carry known_mod = infinity and stay exact through every operation.
// compress() swaps coordinates for their canonical representatives modulo a
// power of p that the current known_mod makes irrelevant, which is what keeps
// long computations from blowing up in rational height.
class PiAdicApprox {
 public:
  PiAdicApprox() = default;
  explicit PiAdicApprox(PiFieldElem v) : v_(std::move(v)), known_(Val::inf()) {}
  PiAdicApprox(PiFieldElem v, Val known) : v_(std::move(v)), known_(known) {}

  static PiAdicApprox zero(unsigned p) { return PiAdicApprox(PiFieldElem(p)); }
  static PiAdicApprox exact(PiFieldElem v) { return PiAdicApprox(std::move(v)); }

  const PiFieldElem& value() const { return v_; }
  const Val& known_mod() const { return known_; }
  unsigned prime() const { return v_.prime(); }
  bool is_exact() const { return !known_.is_finite(); }

  void weaken(const Val& k) { known_ = min(known_, k); }

  // Valuation of the stored value; certified() tells whether it is a genuine
  // valuation of the represented element (i.e. lies below known_mod).
  Val valuation() const { return v_.valuation(); }
  bool certified_nonzero() const { return valuation() < known_; }

  friend PiAdicApprox operator+(const PiAdicApprox& a, const PiAdicApprox& b) {
    return PiAdicApprox(a.v_ + b.v_, min(a.known_, b.known_));
  }
  friend PiAdicApprox operator-(const PiAdicApprox& a, const PiAdicApprox& b) {
    return PiAdicApprox(a.v_ - b.v_, min(a.known_, b.known_));
  }
  PiAdicApprox operator-() const { return PiAdicApprox(-v_, known_); }

  friend PiAdicApprox operator*(const PiAdicApprox& a, const PiAdicApprox& b) {
    Val k = min(min(a.known_ + b.v_.valuation(), b.known_ + a.v_.valuation()),
                a.known_ + b.known_);
    return PiAdicApprox(a.v_ * b.v_, k);
  }

  // Multiplication / division by an exact scalar.
  PiAdicApprox scaled(const PiFieldElem& c) const {
    return PiAdicApprox(v_ * c, known_ + c.valuation());
  }
  PiAdicApprox div_exact(const PiFieldElem& c) const {
    return PiAdicApprox(v_ * c.inverse(), known_ + c.inverse().valuation());
  }

  friend PiAdicApprox operator/(const PiAdicApprox& a, const PiAdicApprox& b);

  PiAdicApprox pow(unsigned long n) const;

  // Canonical height reduction; a no-op on exact elements.
  PiAdicApprox compressed() const;

  std::string to_string() const {
    return v_.to_string() + " (mod v>=" + known_.to_string() + ")";
  }

 private:
  PiFieldElem v_;
  Val known_;
};

// v(a - b) as far as certifiable: the reported valuation is
// min(v(value difference), known_mod of both).  A return of Val::inf() means
// the values agree exactly and both are exact.
Val agreement_valuation(const PiAdicApprox& a, const PiAdicApprox& b);

}  // namespace rigidsum
