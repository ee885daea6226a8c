#include "rigidsum/ffield.hpp"

#include <sstream>
#include <stdexcept>

namespace rigidsum {

namespace {

using Poly = std::vector<uint32_t>;  // dense ascending, coefficients in [0, p)

size_t pdeg(const Poly& a) {
  size_t d = a.size();
  while (d > 0 && a[d - 1] == 0) --d;
  return d;
}

Poly pmod(Poly a, const Poly& f, uint32_t p) {
  size_t df = pdeg(f);
  while (pdeg(a) >= df && df > 0) {
    size_t da = pdeg(a);
    uint32_t lead_inv = 1;
    // f is monic in every call site.
    uint32_t c = a[da - 1] * lead_inv % p;
    for (size_t i = 0; i < df; ++i) {
      uint64_t t = static_cast<uint64_t>(c) * f[i] % p;
      a[da - df + i] = static_cast<uint32_t>((a[da - df + i] + p - t) % p);
    }
  }
  a.resize(pdeg(a));
  return a;
}

Poly pmul(const Poly& a, const Poly& b, uint32_t p) {
  if (pdeg(a) == 0 || pdeg(b) == 0) return {};
  Poly c(pdeg(a) + pdeg(b) - 1, 0);
  for (size_t i = 0; i < pdeg(a); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < pdeg(b); ++j)
      c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  return c;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  return pmod(pmul(a, b, p), f, p);
}

Poly ppowmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
  Poly r = {1};
  base = pmod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
  while (pdeg(b) > 0) {
    // Make b monic before reducing.
    Poly bm = b;
    uint32_t lead = bm[pdeg(bm) - 1];
    if (lead != 1) {
      uint32_t inv = 1;
      for (uint32_t t = 1; t < p; ++t)
        if (t * lead % p == 1) { inv = t; break; }
      for (auto& c : bm) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p);
    }
    Poly r = pmod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  a.resize(pdeg(a));
  return a;
}

// Rabin test: f (monic degree n) is irreducible over F_p iff
// x^(p^n) == x (mod f) and gcd(x^(p^(n/l)) - x, f) = 1 for each prime l | n.
bool irreducible(const Poly& f, uint32_t p, uint32_t n) {
  auto frob_iter = [&](uint32_t k) {
    // x^(p^k) mod f by k successive p-th powers.
    Poly y = {0, 1};
    for (uint32_t i = 0; i < k; ++i) y = ppowmod(y, p, f, p);
    return y;
  };
  Poly xn = frob_iter(n);
  Poly x = {0, 1};
  if (pmod(Poly{xn}, f, p) != pmod(Poly{x}, f, p)) return false;
  // subtract x
  for (uint32_t l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool lprime = true;
    for (uint32_t d = 2; d * d <= l; ++d)
      if (l % d == 0) { lprime = false; break; }
    if (!lprime) continue;
    Poly y = frob_iter(n / l);
    Poly diff = y;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (pdeg(pgcd(f, diff, p)) != 1) return false;
  }
  return true;
}

}  // namespace

FFContext::FFContext(uint32_t p, uint32_t n) : p_(p), n_(n) {
  if (p < 2 || n < 1) throw std::invalid_argument("FFContext: bad parameters");
  size_ = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (size_ > (1ull << 62) / p) throw std::invalid_argument("FFContext: field too large");
    size_ *= p;
  }
  // Deterministic least irreducible modulus.
  mod_.assign(n, 0);
  if (n == 1) {
    // f = x: the prime field itself.
  } else {
    bool found = false;
    for (uint64_t m = 0; m < size_; ++m) {
      Poly f(n + 1, 0);
      uint64_t t = m;
      for (uint32_t i = 0; i < n; ++i) {
        f[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      f[n] = 1;
      if (irreducible(f, p, n)) {
        for (uint32_t i = 0; i < n; ++i) mod_[i] = f[i];
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("FFContext: no irreducible found");
  }
  // Reduction rows: x^(n+k) = -sum_i mod_i x^(i+k), reduced recursively.
  red_.assign(n > 1 ? n - 1 : 0, std::vector<uint32_t>(n, 0));
  for (uint32_t k = 0; k + 1 < n; ++k) {
    std::vector<uint32_t> acc(n, 0);
    // start from x^n = -mod_, shifted k times with re-reduction
    std::vector<uint32_t> cur(n, 0);
    for (uint32_t i = 0; i < n; ++i) cur[i] = (p - mod_[i]) % p;
    for (uint32_t s = 0; s < k; ++s) {
      // multiply cur by x
      uint32_t top = cur[n - 1];
      for (uint32_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (uint32_t i = 0; i < n; ++i) {
          uint64_t t = static_cast<uint64_t>(top) * ((p - mod_[i]) % p) % p;
          cur[i] = static_cast<uint32_t>((cur[i] + t) % p);
        }
      }
    }
    acc = cur;
    red_[k] = acc;
  }
  // Frobenius images of the basis.
  frob_.assign(n, std::vector<uint32_t>(n, 0));
  Poly f(n + 1, 0);
  for (uint32_t i = 0; i < n; ++i) f[i] = mod_[i];
  f[n] = 1;
  for (uint32_t i = 0; i < n; ++i) {
    Poly xi(i + 1, 0);
    xi[i] = 1;
    Poly im = n == 1 ? Poly{} : ppowmod(xi, p, f, p);
    for (size_t j = 0; j < im.size() && j < n; ++j) frob_[i][j] = im[j];
    if (n == 1 && i == 0) frob_[0][0] = 1;
  }
  // Trace of the basis: Tr(x^i) = sum of n Frobenius iterates.
  trace_basis_.assign(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<uint32_t> cur(n, 0), acc(n, 0), tmp(n, 0);
    cur[i] = 1;
    for (uint32_t k = 0; k < n; ++k) {
      for (uint32_t j = 0; j < n; ++j) acc[j] = (acc[j] + cur[j]) % p;
      frobenius(cur.data(), tmp.data());
      cur = tmp;
    }
    // acc must be a constant (it is Galois-invariant)
    trace_basis_[i] = acc[0];
  }
}

void FFContext::mul(const uint32_t* a, const uint32_t* b, uint32_t* c) const {
  uint32_t n = n_;
  uint64_t full[32] = {0};
  for (uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < n; ++j) full[i + j] += static_cast<uint64_t>(a[i]) * b[j];
  }
  // Fold degrees n..2n-2 with the reduction rows.
  for (uint32_t k = 0; k + 1 < n; ++k) {
    uint64_t t = full[n + k] % p_;
    if (t == 0) continue;
    const auto& row = red_[k];
    for (uint32_t j = 0; j < n; ++j) full[j] += t * row[j];
  }
  for (uint32_t j = 0; j < n; ++j) c[j] = static_cast<uint32_t>(full[j] % p_);
}

void FFContext::add(const uint32_t* a, const uint32_t* b, uint32_t* c) const {
  for (uint32_t j = 0; j < n_; ++j) c[j] = (a[j] + b[j]) % p_;
}

uint32_t FFContext::trace(const uint32_t* a) const {
  uint64_t t = 0;
  for (uint32_t j = 0; j < n_; ++j) t += static_cast<uint64_t>(a[j]) * trace_basis_[j];
  return static_cast<uint32_t>(t % p_);
}

void FFContext::frobenius(const uint32_t* a, uint32_t* out) const {
  uint64_t acc[32] = {0};
  for (uint32_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < n_; ++j) acc[j] += static_cast<uint64_t>(a[i]) * frob_[i][j];
  }
  for (uint32_t j = 0; j < n_; ++j) out[j] = static_cast<uint32_t>(acc[j] % p_);
}

uint64_t FFContext::encode(const uint32_t* a) const {
  uint64_t idx = 0;
  for (uint32_t i = n_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

void FFContext::decode(uint64_t idx, uint32_t* out) const {
  for (uint32_t i = 0; i < n_; ++i) {
    out[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
}

FFElem FFElem::zero(const FFContext* ctx) {
  return FFElem(ctx, std::vector<uint32_t>(ctx->n(), 0));
}

FFElem FFElem::from_int(const FFContext* ctx, long v) {
  long p = ctx->p();
  long r = v % p;
  if (r < 0) r += p;
  std::vector<uint32_t> c(ctx->n(), 0);
  c[0] = static_cast<uint32_t>(r);
  return FFElem(ctx, std::move(c));
}

FFElem FFElem::generator(const FFContext* ctx) {
  std::vector<uint32_t> c(ctx->n(), 0);
  if (ctx->n() > 1) c[1] = 1;
  return FFElem(ctx, std::move(c));
}

bool FFElem::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  std::vector<uint32_t> c(a.c_.size());
  a.ctx_->add(a.c_.data(), b.c_.data(), c.data());
  return FFElem(a.ctx_, std::move(c));
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  uint32_t p = a.ctx_->p();
  std::vector<uint32_t> c(a.c_.size());
  for (size_t j = 0; j < c.size(); ++j) c[j] = (a.c_[j] + p - b.c_[j]) % p;
  return FFElem(a.ctx_, std::move(c));
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  std::vector<uint32_t> c(a.c_.size());
  a.ctx_->mul(a.c_.data(), b.c_.data(), c.data());
  return FFElem(a.ctx_, std::move(c));
}

FFElem FFElem::pow(uint64_t k) const {
  FFElem r = from_int(ctx_, 1);
  FFElem base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

FFElem FFElem::frobenius() const {
  std::vector<uint32_t> out(c_.size());
  ctx_->frobenius(c_.data(), out.data());
  return FFElem(ctx_, std::move(out));
}

std::string FFElem::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

uint32_t ff_trace(const FFElem& a) { return a.ctx()->trace(a.coords().data()); }

FFElem least_root(const FFContext* ctx, const std::vector<uint32_t>& g) {
  std::vector<uint32_t> x(ctx->n()), acc(ctx->n()), tmp(ctx->n());
  for (uint64_t idx = 0; idx < ctx->size(); ++idx) {
    ctx->decode(idx, x.data());
    // Horner: acc = g(x)
    std::fill(acc.begin(), acc.end(), 0);
    for (size_t k = g.size(); k-- > 0;) {
      ctx->mul(acc.data(), x.data(), tmp.data());
      tmp[0] = (tmp[0] + g[k]) % ctx->p();
      acc = tmp;
    }
    bool zero = true;
    for (auto v : acc)
      if (v != 0) { zero = false; break; }
    if (zero) return FFElem(ctx, x);
  }
  throw std::domain_error("least_root: polynomial has no root in this field");
}

}  // namespace rigidsum
