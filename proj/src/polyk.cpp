#include "rigidsum/polyk.hpp"

#include <sstream>
#include <stdexcept>

namespace rigidsum {

PolyK poly_zero(unsigned p) { return PolyK{PiFieldElem(p)}; }

PolyK poly_from_ints(unsigned p, const std::vector<long>& coeffs) {
  PolyK f;
  f.reserve(coeffs.size());
  for (long c : coeffs) f.push_back(PiFieldElem::from_int(p, c));
  if (f.empty()) f.push_back(PiFieldElem(p));
  return f;
}

long poly_deg(const PolyK& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return static_cast<long>(i);
  return -1;
}

PolyK& poly_trim(PolyK& f) {
  long d = poly_deg(f);
  f.resize(static_cast<size_t>(d < 0 ? 1 : d + 1),
           PiFieldElem(f.empty() ? 0 : f[0].prime()));
  return f;
}

bool poly_is_zero(const PolyK& f) { return poly_deg(f) < 0; }

PolyK poly_add(const PolyK& a, const PolyK& b) {
  PolyK r = a.size() >= b.size() ? a : b;
  const PolyK& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  return r;
}

PolyK poly_sub(const PolyK& a, const PolyK& b) {
  return poly_add(a, poly_neg(b));
}

PolyK poly_neg(PolyK a) {
  for (auto& c : a) c = -c;
  return a;
}

PolyK poly_mul(const PolyK& a, const PolyK& b) {
  unsigned p = a.empty() ? 0 : a[0].prime();
  long da = poly_deg(a), db = poly_deg(b);
  if (da < 0 || db < 0) return poly_zero(p);
  PolyK c(static_cast<size_t>(da + db + 1), PiFieldElem(p));
  for (long i = 0; i <= da; ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; j <= db; ++j) {
      if (b[j].is_zero()) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

PolyK poly_scale(PolyK a, const PiFieldElem& c) {
  for (auto& x : a) x = x * c;
  return a;
}

PolyK poly_derivative(const PolyK& f) {
  unsigned p = f.empty() ? 0 : f[0].prime();
  if (f.size() <= 1) return poly_zero(p);
  PolyK d(f.size() - 1, PiFieldElem(p));
  for (size_t i = 1; i < f.size(); ++i)
    d[i - 1] = f[i].mul_monomial(Rat(static_cast<long>(i)), 0);
  return d;
}

PolyK poly_compose_xq(const PolyK& f, unsigned q) {
  unsigned p = f.empty() ? 0 : f[0].prime();
  long d = poly_deg(f);
  if (d < 0) return poly_zero(p);
  PolyK r(static_cast<size_t>(d) * q + 1, PiFieldElem(p));
  for (size_t i = 0; i < f.size(); ++i) r[i * q] = f[i];
  return r;
}

PiFieldElem poly_eval(const PolyK& f, const PiFieldElem& x) {
  PiFieldElem acc(x.prime());
  for (size_t i = f.size(); i-- > 0;) {
    acc = acc * x;
    acc += f[i];
  }
  return acc;
}

PiFieldElem poly_leading(const PolyK& f) {
  long d = poly_deg(f);
  if (d < 0) throw std::domain_error("poly_leading: zero polynomial");
  return f[static_cast<size_t>(d)];
}

std::string poly_to_string(const PolyK& f) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << f[i].to_string() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace rigidsum
