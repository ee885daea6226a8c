#include "rigidsum/cyclo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rigidsum {

namespace {

void check_same(const CycloElem& a, const CycloElem& b) {
  if (a.prime() != b.prime() || a.prime() == 0)
    throw std::invalid_argument("CycloElem: mismatched or unset prime");
}

// Reduce exponent vector entries at or above p-1 via
// zeta^k = -sum_j zeta^(k-p+1+j), j = 0..p-2 (strictly lowers the exponent).
void fold(std::vector<Rat>& full, unsigned p) {
  for (size_t k = full.size(); k-- > p - 1;) {
    if (full[k] == 0) continue;
    Rat c = full[k];
    full[k] = 0;
    for (size_t j = 0; j + 1 < p; ++j) full[k - (p - 1) + j] -= c;
  }
}

}  // namespace

CycloElem CycloElem::from_rat(unsigned p, const Rat& x) {
  CycloElem e(p);
  e.c_[0] = x;
  return e;
}

CycloElem CycloElem::zeta_pow(unsigned p, long k) {
  long kk = k % static_cast<long>(p);
  if (kk < 0) kk += p;
  CycloElem e(p);
  if (static_cast<unsigned>(kk) < p - 1) {
    e.c_[static_cast<size_t>(kk)] = 1;
  } else {
    for (auto& c : e.c_) c = -1;  // zeta^(p-1)
  }
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool CycloElem::is_integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_same(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_same(*this, o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
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
  fold(full, p);
  CycloElem r(p);
  for (size_t k = 0; k < d; ++k) r.c_[k] = full[k];
  return r;
}

CycloElem& CycloElem::scale(const Rat& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw std::domain_error("CycloElem: inverse of zero");
  if (p_ == 2) {
    CycloElem r(2);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Modulus Phi_p(T) = 1 + T + ... + T^(p-1).
  std::vector<Rat> m(p_, Rat(1));
  std::vector<Rat> inv = qpoly_inverse_mod(c_, m);
  CycloElem r(p_);
  for (size_t k = 0; k < r.c_.size() && k < inv.size(); ++k) r.c_[k] = inv[k];
  return r;
}

CycloElem CycloElem::galois(unsigned k) const {
  if (p_ == 2) return *this;
  if (k % p_ == 0) throw std::invalid_argument("CycloElem::galois: k not a unit");
  std::vector<Rat> full(2 * p_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    full[(i * k) % p_] += c_[i];
  }
  fold(full, p_);
  CycloElem r(p_);
  for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = full[j];
  return r;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(c_[k]);
    if (k == 1) os << "*zeta";
    if (k > 1) os << "*zeta^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PiAdicApprox hensel_zeta_p(unsigned p, const Rat& m) {
  if (p == 2) return PiAdicApprox::exact(PiFieldElem::from_int(2, -1));
  long d = static_cast<long>(p) - 1;
  // g(u) = sum_{j=1}^{p} C(p,j) u^(j-1), g(zeta - 1) = 0.
  std::vector<Int> g(p), gp(p - 1);
  for (unsigned j = 1; j <= p; ++j) {
    Int bc;
    mpz_bin_uiui(bc.get_mpz_t(), p, j);
    g[j - 1] = bc;
    if (j >= 2) gp[j - 2] = bc * (j - 1);
  }
  auto eval = [&](const std::vector<Int>& poly, const PiFieldElem& u) {
    PiFieldElem acc(p);
    for (size_t k = poly.size(); k-- > 0;) {
      acc = acc * u;
      acc += PiFieldElem::from_rat(p, Rat(poly[k]));
    }
    return acc;
  };
  PiFieldElem u = PiFieldElem::pi(p);
  Rat e(2, d);  // proven error valuation of the seed
  Rat step(1, d);
  while (e < m) {
    Rat enext = 2 * e - step;
    PiFieldElem gu = eval(g, u);
    PiFieldElem gpu = eval(gp, u);
    u -= gu * gpu.inverse();
    // Height cap: compressing at enext preserves the element mod v >= enext.
    u = PiAdicApprox(u, Val::of(enext)).compressed().value();
    e = enext;
  }
  return PiAdicApprox(PiFieldElem::from_int(p, 1) + u, Val::of(e));
}

PiAdicApprox embed_cyclo(const CycloElem& x, const PiAdicApprox& z) {
  unsigned p = z.prime();
  if (x.prime() != p) throw std::invalid_argument("embed_cyclo: prime mismatch");
  PiAdicApprox acc = PiAdicApprox::zero(p);
  for (size_t k = x.coords().size(); k-- > 0;) {
    acc = acc * z;
    acc = acc + PiAdicApprox::exact(PiFieldElem::from_rat(p, x.coord(k)));
    acc = acc.compressed();
  }
  return acc;
}

std::vector<std::complex<double>> complex_embeddings(const CycloElem& x) {
  unsigned p = x.prime();
  std::vector<std::complex<double>> out;
  for (unsigned k = 1; k < p; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < x.coords().size(); ++i) {
      if (x.coord(i) == 0) continue;
      double angle = 2.0 * M_PI * static_cast<double>((i * k) % p) / p;
      acc += x.coord(i).get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out.push_back(acc);
  }
  return out;
}

bool squared_modulus_exact(const CycloElem& x, Rat& out) {
  CycloElem prod = x * x.conj();
  if (!prod.is_rational()) return false;
  out = prod.rational_part();
  return true;
}

}  // namespace rigidsum
