#include "rigidsum/rational.hpp"

#include <stdexcept>

namespace rigidsum {

long vp_int(const Int& n, unsigned long p) {
  if (n == 0) throw std::domain_error("vp_int: zero has no finite valuation");
  Int rest;
  Int pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

long vp_rat(const Rat& x, unsigned long p) {
  if (x == 0) throw std::domain_error("vp_rat: zero has no finite valuation");
  long vnum = vp_int(Int(x.get_num()), p);
  if (vnum > 0) return vnum;  // lowest terms: num and den share no factor
  long vden = vp_int(Int(x.get_den()), p);
  return vnum - vden;
}

Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

long vp_factorial(unsigned long n, unsigned long p) {
  long v = 0;
  unsigned long q = p;
  while (q <= n) {
    v += static_cast<long>(n / q);
    if (q > n / p) break;  // next q would overflow past n anyway
    q *= p;
  }
  return v;
}

bool denom_coprime_to(const Rat& x, unsigned long p) {
  return mpz_divisible_ui_p(x.get_den().get_mpz_t(), p) == 0;
}

Int mod_ppow(const Rat& x, unsigned long p, unsigned long e) {
  if (e == 0) return Int(0);
  if (!denom_coprime_to(x, p))
    throw std::domain_error("mod_ppow: denominator not coprime to p");
  Int m = int_pow(p, e);
  Int deninv;
  if (mpz_invert(deninv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("mod_ppow: denominator not invertible");
  Int r = (x.get_num() % m) * deninv % m;
  if (r < 0) r += m;
  return r;
}

std::string rat_to_string(const Rat& x) {
  return x.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

namespace {

using QPoly = std::vector<Rat>;

size_t qdeg(const QPoly& a) {
  size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d;  // number of meaningful coefficients; 0 means the zero polynomial
}

QPoly qtrim(QPoly a) {
  a.resize(qdeg(a));
  return a;
}

// a mod b with quotient, b nonzero.
void qdivmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  QPoly r = qtrim(a);
  size_t db = qdeg(b);
  if (db == 0) throw std::domain_error("qdivmod: division by zero polynomial");
  quo.assign(r.size() > db - 1 ? r.size() - db + 1 : 0, Rat(0));
  while (qdeg(r) >= db) {
    size_t dr = qdeg(r);
    Rat c = r[dr - 1] / b[db - 1];
    size_t shift = dr - db;
    quo[shift] = c;
    for (size_t i = 0; i < db; ++i) r[shift + i] -= c * b[i];
    r = qtrim(r);
  }
  rem = r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (qdeg(a) == 0 || qdeg(b) == 0) return {};
  QPoly c(qdeg(a) + qdeg(b) - 1, Rat(0));
  for (size_t i = 0; i < qdeg(a); ++i)
    for (size_t j = 0; j < qdeg(b); ++j) c[i + j] += a[i] * b[j];
  return c;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return qtrim(a);
}

}  // namespace

std::vector<Rat> qpoly_inverse_mod(const std::vector<Rat>& a,
                                   const std::vector<Rat>& m) {
  // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
  QPoly r0 = qtrim(m), r1;
  QPoly dummy;
  qdivmod(a, m, dummy, r1);
  QPoly s0 = {}, s1 = {Rat(1)};
  while (qdeg(r1) > 0) {
    QPoly quo, rem;
    qdivmod(r0, r1, quo, rem);
    QPoly snew = qsub(s0, qmul(quo, s1));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snew;
  }
  if (qdeg(r0) != 1)
    throw std::domain_error("qpoly_inverse_mod: element not invertible");
  // r0 is a nonzero constant: s0 * a == r0 (mod m).
  QPoly inv = s0;
  for (auto& c : inv) c /= r0[0];
  QPoly quo, rem;
  qdivmod(inv, m, quo, rem);
  rem.resize(m.size() - 1, Rat(0));
  return rem;
}

}  // namespace rigidsum
