#include "rigidsum/piadic.hpp"

#include <stdexcept>

namespace rigidsum {

PiAdicApprox operator/(const PiAdicApprox& a, const PiAdicApprox& b) {
  if (b.v_.is_zero())
    throw std::domain_error("PiAdicApprox: division by (apparent) zero");
  Val vb = b.v_.valuation();
  if (!(vb < b.known_))
    throw std::domain_error(
        "PiAdicApprox: divisor valuation not certified below known_mod");
  // x/y - x0/y0 = (e1*y0 - x0*e2)/(y0*y): worst case
  // min(known_x - v(y), v(x) + known_y - 2 v(y)).
  Val k = min(a.known_ - vb.value(),
              a.v_.valuation() + b.known_ - vb.value() - vb.value());
  return PiAdicApprox(a.v_ * b.v_.inverse(), k);
}

PiAdicApprox PiAdicApprox::pow(unsigned long n) const {
  PiAdicApprox r = exact(PiFieldElem::from_int(prime(), 1));
  PiAdicApprox base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

PiAdicApprox PiAdicApprox::compressed() const {
  if (!known_.is_finite()) return *this;
  unsigned p = prime();
  long d = static_cast<long>(p) - 1;
  PiFieldElem w(p);
  for (size_t k = 0; k < p - 1; ++k) {
    const Rat& c = v_.coord(k);
    if (c == 0) continue;
    if (!denom_coprime_to(c, p)) {
      w.coord(k) = c;  // cannot canonicalize; keep exact
      continue;
    }
    // Changing coordinate k by a multiple of p^e changes the element by
    // something of valuation >= e + k/(p-1); harmless once >= known_mod.
    Rat bound = known_.value() - Rat(static_cast<long>(k), d);
    Int num = bound.get_num(), den = bound.get_den();
    Int e_ceil;
    mpz_cdiv_q(e_ceil.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long e = e_ceil.get_si();
    if (e <= 0) continue;  // representative mod p^0 would be 0 but changing by
                           // c itself is only valid if v_p(c) >= bound; keep.
    w.coord(k) = Rat(mod_ppow(c, p, static_cast<unsigned long>(e)));
  }
  return PiAdicApprox(std::move(w), known_);
}

Val agreement_valuation(const PiAdicApprox& a, const PiAdicApprox& b) {
  PiFieldElem d = a.value() - b.value();
  Val v = d.is_zero() ? Val::inf() : d.valuation();
  return min(v, min(a.known_mod(), b.known_mod()));
}

}  // namespace rigidsum
