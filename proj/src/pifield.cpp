#include "rigidsum/pifield.hpp"

#include <sstream>
#include <stdexcept>

namespace rigidsum {

namespace {

void check_same(const PiFieldElem& a, const PiFieldElem& b) {
  if (a.prime() != b.prime() || a.prime() == 0)
    throw std::invalid_argument("PiFieldElem: mismatched or unset prime");
}

}  // namespace

PiFieldElem PiFieldElem::from_rat(unsigned p, const Rat& x) {
  PiFieldElem e(p);
  e.c_[0] = x;
  return e;
}

PiFieldElem PiFieldElem::from_int(unsigned p, long n) {
  return from_rat(p, Rat(n));
}

PiFieldElem PiFieldElem::pi_pow(unsigned p, long k) {
  return monomial(p, Rat(1), k);
}

PiFieldElem PiFieldElem::monomial(unsigned p, const Rat& r, long k) {
  PiFieldElem e(p);
  long d = static_cast<long>(p) - 1;
  long q = k >= 0 ? k / d : -((-k + d - 1) / d);
  long rem = k - q * d;  // 0 <= rem < d
  // pi^(d*q) = (-p)^q.
  Rat f = r;
  if (q >= 0) {
    Int pw = int_pow(p, static_cast<unsigned long>(q));
    if (q % 2 == 1) pw = -pw;
    f *= Rat(pw);
  } else {
    Int pw = int_pow(p, static_cast<unsigned long>(-q));
    if ((-q) % 2 == 1) pw = -pw;
    f /= Rat(pw);
  }
  e.c_[static_cast<size_t>(rem)] = f;
  return e;
}

bool PiFieldElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool PiFieldElem::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Val PiFieldElem::valuation() const {
  Val best = Val::inf();
  long d = static_cast<long>(p_) - 1;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rat v = Rat(vp_rat(c_[k], p_)) + Rat(static_cast<long>(k), d);
    best = min(best, Val::of(v));
  }
  return best;
}

PiFieldElem PiFieldElem::operator-() const {
  PiFieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

PiFieldElem& PiFieldElem::operator+=(const PiFieldElem& o) {
  check_same(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PiFieldElem& PiFieldElem::operator-=(const PiFieldElem& o) {
  check_same(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PiFieldElem operator*(const PiFieldElem& a, const PiFieldElem& b) {
  check_same(a, b);
  unsigned p = a.p_;
  size_t d = p - 1;
  std::vector<Rat> full(2 * d - 1, Rat(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      full[i + j] += a.c_[i] * b.c_[j];
    }
  }
  PiFieldElem r(p);
  Rat mp(-static_cast<long>(p));
  for (size_t k = 0; k < full.size(); ++k) {
    if (k < d)
      r.c_[k] += full[k];
    else
      r.c_[k - d] += full[k] * mp;  // pi^(p-1) = -p
  }
  return r;
}

PiFieldElem& PiFieldElem::scale(const Rat& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

PiFieldElem PiFieldElem::mul_monomial(const Rat& r, long k) const {
  PiFieldElem out(p_);
  if (r == 0) return out;
  long d = static_cast<long>(p_) - 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = static_cast<long>(i) + k;
    long q = e >= 0 ? e / d : -((-e + d - 1) / d);
    long rem = e - q * d;
    Rat f = c_[i] * r;
    if (q > 0) {
      Int pw = int_pow(p_, static_cast<unsigned long>(q));
      if (q % 2 == 1) pw = -pw;
      f *= Rat(pw);
    } else if (q < 0) {
      Int pw = int_pow(p_, static_cast<unsigned long>(-q));
      if ((-q) % 2 == 1) pw = -pw;
      f /= Rat(pw);
    }
    out.c_[static_cast<size_t>(rem)] += f;
  }
  return out;
}

PiFieldElem PiFieldElem::inverse() const {
  if (p_ == 0) throw std::invalid_argument("PiFieldElem: unset prime");
  if (is_zero()) throw std::domain_error("PiFieldElem: inverse of zero");
  if (p_ == 2) {
    PiFieldElem r(2);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Modulus T^(p-1) + p.
  std::vector<Rat> m(p_, Rat(0));
  m[0] = Rat(static_cast<long>(p_));
  m[p_ - 1] = 1;
  std::vector<Rat> inv = qpoly_inverse_mod(c_, m);
  PiFieldElem r(p_);
  for (size_t k = 0; k < r.c_.size() && k < inv.size(); ++k) r.c_[k] = inv[k];
  return r;
}

std::string PiFieldElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(c_[k]);
    if (k == 1) os << "*pi";
    if (k > 1) os << "*pi^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace rigidsum
