#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rigidsum/piadic.hpp"
#include "rigidsum/pifield.hpp"

namespace rigidsum {

// Element of Q(zeta_p) in the basis 1, zeta, ..., zeta^(p-2), with the
// reduction zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  Kept globally
// distinct from Q(pi): the two only meet through embed_cyclo, which sends
// zeta to the Hensel root of z^p = 1 with z == 1 + pi (mod pi^2).
// For p = 2: zeta = -1 and the type degenerates to Q.
class CycloElem {
 public:
  CycloElem() : p_(0) {}
  explicit CycloElem(unsigned p) : p_(p), c_(p - 1, Rat(0)) {}

  static CycloElem from_rat(unsigned p, const Rat& x);
  static CycloElem from_int(unsigned p, long n) { return from_rat(p, Rat(n)); }
  // zeta^k for any integer k.
  static CycloElem zeta_pow(unsigned p, long k);

  unsigned prime() const { return p_; }
  const std::vector<Rat>& coords() const { return c_; }
  Rat& coord(size_t k) { return c_[k]; }
  const Rat& coord(size_t k) const { return c_[k]; }

  bool is_zero() const;
  bool is_rational() const;
  const Rat& rational_part() const { return c_[0]; }
  bool is_integral() const;  // every coordinate has denominator 1

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  CycloElem& scale(const Rat& r);
  CycloElem inverse() const;
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inverse();
  }

  // Galois action zeta -> zeta^k, k coprime to p.
  CycloElem galois(unsigned k) const;
  // Complex conjugation zeta -> zeta^(-1).
  CycloElem conj() const { return p_ == 2 ? *this : galois(p_ - 1); }

  std::string to_string() const;

 private:
  unsigned p_;
  std::vector<Rat> c_;
};

// The unique root of z^p = 1 with z == 1 + pi (mod pi^2), to valuation
// precision >= m (v(p) = 1 units).  Newton iteration on
// g(u) = ((1+u)^p - 1)/u seeded at u = pi; the seed error has valuation
// 2/(p-1) and each step maps e -> 2e - 1/(p-1), so convergence is quadratic
// once e > 1/(p-1).  For p = 2 returns exactly -1.
PiAdicApprox hensel_zeta_p(unsigned p, const Rat& m);

// Ring map Z[zeta_p] -> K sending zeta to the Hensel root z (precision from z).
PiAdicApprox embed_cyclo(const CycloElem& x, const PiAdicApprox& z);

// The p-1 complex embeddings zeta -> exp(2 pi i k / p), k = 1..p-1.
std::vector<std::complex<double>> complex_embeddings(const CycloElem& x);

// |iota_k(x)|^2 = iota_k(x * conj(x)) as an exact rational, when x * conj(x)
// is rational (then the squared modulus is the same in every embedding).
bool squared_modulus_exact(const CycloElem& x, Rat& out);

}  // namespace rigidsum
