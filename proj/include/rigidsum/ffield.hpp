#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rigidsum {

// F_{p^n} with the deterministic modulus: the lexicographically least monic
// irreducible of degree n, where the coefficient tuple (c_0, ..., c_{n-1}) of
// f = x^n + c_{n-1} x^{n-1} + ... + c_0 is ordered as the base-p integer
// sum c_i p^i.  Elements are coefficient vectors in the basis 1, x, ..., x^(n-1);
// the same base-p integer encoding orders elements (enumeration order).
class FFContext {
 public:
  FFContext(uint32_t p, uint32_t n);

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  uint64_t size() const { return size_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  // c = a * b (coefficient arrays of length n, may alias).
  void mul(const uint32_t* a, const uint32_t* b, uint32_t* c) const;
  void add(const uint32_t* a, const uint32_t* b, uint32_t* c) const;
  // Absolute trace to F_p.
  uint32_t trace(const uint32_t* a) const;
  // Frobenius a -> a^p (precomputed linear map).
  void frobenius(const uint32_t* a, uint32_t* out) const;

  uint64_t encode(const uint32_t* a) const;      // base-p integer of the vector
  void decode(uint64_t idx, uint32_t* out) const;

 private:
  uint32_t p_, n_;
  uint64_t size_;
  std::vector<uint32_t> mod_;                  // c_0..c_{n-1}
  std::vector<std::vector<uint32_t>> red_;     // x^{n+k} reduced, k = 0..n-2
  std::vector<std::vector<uint32_t>> frob_;    // x^{ip} reduced, i = 0..n-1
  std::vector<uint32_t> trace_basis_;          // Tr(x^i), i = 0..n-1
};

class FFElem {
 public:
  FFElem() : ctx_(nullptr) {}
  FFElem(const FFContext* ctx, std::vector<uint32_t> c) : ctx_(ctx), c_(std::move(c)) {}
  static FFElem zero(const FFContext* ctx);
  static FFElem from_int(const FFContext* ctx, long v);   // image of an integer
  static FFElem generator(const FFContext* ctx);          // the class of x

  const FFContext* ctx() const { return ctx_; }
  const std::vector<uint32_t>& coords() const { return c_; }
  bool is_zero() const;
  uint64_t index() const { return ctx_->encode(c_.data()); }

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend bool operator==(const FFElem& a, const FFElem& b) {
    return a.c_ == b.c_;
  }
  FFElem pow(uint64_t k) const;
  FFElem frobenius() const;

  std::string to_string() const;

 private:
  const FFContext* ctx_;
  std::vector<uint32_t> c_;
};

// Tr_{F_{p^n}/F_p}(a).
uint32_t ff_trace(const FFElem& a);

// Least root (in enumeration order) of the polynomial with F_p coefficients
// g = sum g_i x^i inside this field; throws if none exists.
FFElem least_root(const FFContext* ctx, const std::vector<uint32_t>& g);

}  // namespace rigidsum
