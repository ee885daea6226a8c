#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rigidsum {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation of a nonzero integer / rational.  Caller must not pass 0.
long vp_int(const Int& n, unsigned long p);
long vp_rat(const Rat& x, unsigned long p);

Int int_pow(unsigned long base, unsigned long exp);
Int factorial(unsigned long n);

// v_p(n!) by Legendre's formula.
long vp_factorial(unsigned long n, unsigned long p);

// Canonical representative of a rational with denominator coprime to p:
// the unique integer r in [0, p^e) with r == x (mod p^e).  e >= 0.
Int mod_ppow(const Rat& x, unsigned long p, unsigned long e);

// True if the denominator of x (in lowest terms) is coprime to p.
bool denom_coprime_to(const Rat& x, unsigned long p);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Extended Euclid in Q[T]/(m): returns the inverse of a modulo the monic
// polynomial m.  Polynomials are dense ascending coefficient vectors.
// Throws std::domain_error if a is not invertible (gcd != 1).
std::vector<Rat> qpoly_inverse_mod(const std::vector<Rat>& a,
                                   const std::vector<Rat>& m);

}  // namespace rigidsum
