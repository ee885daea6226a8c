#pragma once

#include <stdexcept>
#include <string>

#include "rigidsum/rational.hpp"

namespace rigidsum {

// Exact valuation value, normalized so v(p) = 1 (hence v(pi) = 1/(p-1)).
// The value +infinity stands for the valuation of 0 and for "known exactly".
class Val {
 public:
  Val() : finite_(false) {}
  static Val inf() { return Val(); }
  static Val of(Rat v) {
    Val r;
    r.finite_ = true;
    v.canonicalize();  // mpq equality needs canonical form
    r.v_ = std::move(v);
    return r;
  }
  static Val of(long num, long den) { return of(Rat(num, den)); }

  bool is_finite() const { return finite_; }
  const Rat& value() const {
    if (!finite_) throw std::domain_error("Val: infinite valuation has no value");
    return v_;
  }

  friend Val operator+(const Val& a, const Val& b) {
    if (!a.finite_ || !b.finite_) return inf();
    return of(a.v_ + b.v_);
  }
  friend Val operator-(const Val& a, const Rat& c) {
    if (!a.finite_) return inf();
    return of(a.v_ - c);
  }
  friend Val operator+(const Val& a, const Rat& c) {
    if (!a.finite_) return inf();
    return of(a.v_ + c);
  }

  friend Val min(const Val& a, const Val& b) { return b < a ? b : a; }

  friend bool operator<(const Val& a, const Val& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
  friend bool operator>=(const Val& a, const Val& b) { return b <= a; }
  friend bool operator>(const Val& a, const Val& b) { return b < a; }
  friend bool operator==(const Val& a, const Val& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }

  bool operator>=(const Rat& c) const { return !finite_ || v_ >= c; }
  bool operator<(const Rat& c) const { return finite_ && v_ < c; }

  std::string to_string() const {
    return finite_ ? rat_to_string(v_) : std::string("inf");
  }

 private:
  bool finite_;
  Rat v_;
};

}  // namespace rigidsum
