#pragma once

#include <string>

#include "cucalc/errors.hpp"
#include "cucalc/rational.hpp"

namespace cucalc {

// {0, 1, 2, ...} with an absorbing infinity. The scalar for multiplicities and
// for scaling semigroup elements; inf * 0 = 0.
class ExtNat {
 public:
  constexpr ExtNat() : inf_(false), v_(0) {}
  ExtNat(long long v) : inf_(false), v_(v) {
    if (v < 0) throw DomainError("negative value for extended natural");
  }
  static ExtNat infinity() {
    ExtNat n;
    n.inf_ = true;
    return n;
  }

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && v_ == 0; }
  long long finite_value() const {
    if (inf_) throw DomainError("finite_value on infinity");
    return v_;
  }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ || b.inf_) return infinity();
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw DomainError("extended natural overflow");
    return ExtNat(r);
  }
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b) {
    if (a.is_zero() || b.is_zero()) return ExtNat(0);
    if (a.inf_ || b.inf_) return infinity();
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw DomainError("extended natural overflow");
    return ExtNat(r);
  }
  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const ExtNat& a, const ExtNat& b) { return !(a == b); }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) {
    if (b.inf_) return true;
    if (a.inf_) return false;
    return a.v_ <= b.v_;
  }
  friend bool operator<(const ExtNat& a, const ExtNat& b) { return a <= b && a != b; }

  // n is compactly contained in m iff n is finite and n <= m.
  bool way_below(const ExtNat& m) const { return !inf_ && *this <= m; }

  ExtNat min(const ExtNat& o) const { return *this <= o ? *this : o; }

  // Truncation: finite values are their own approximants; infinity descends to k.
  ExtNat approximant(int k) const { return inf_ ? ExtNat(k) : *this; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  bool inf_;
  long long v_;
};

// [0, inf] with exact rational finite part.
class ExtRat {
 public:
  constexpr ExtRat() : inf_(false), q_() {}
  ExtRat(const Rational& q) : inf_(false), q_(q) {
    if (q.is_negative()) throw DomainError("negative value for extended nonnegative rational");
  }
  ExtRat(long long v) : ExtRat(Rational(v)) {}
  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && q_.is_zero(); }
  const Rational& finite_value() const {
    if (inf_) throw DomainError("finite_value on infinity");
    return q_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtRat(a.q_ + b.q_);
  }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.q_ == b.q_);
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) {
    if (b.inf_) return true;
    if (a.inf_) return false;
    return a.q_ <= b.q_;
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) { return a <= b && a != b; }

  // Only 0 is compact: a << b iff a = 0, or a is finite and a < b.
  bool way_below(const ExtRat& b) const {
    if (is_zero()) return true;
    return !inf_ && *this < b;
  }

  ExtRat min(const ExtRat& o) const { return *this <= o ? *this : o; }

  ExtRat scale_nat(const ExtNat& n) const {
    if (n.is_zero() || is_zero()) return ExtRat(Rational(0));
    if (n.is_infinite() || inf_) return infinity();
    return ExtRat(q_ * Rational(n.finite_value()));
  }

  // k-th canonical approximant: q * (k+1)/(k+2) for finite q, k for infinity.
  // Strictly increasing in k (for nonzero values) with supremum the value itself.
  ExtRat approximant(int k) const {
    if (inf_) return ExtRat(Rational(k));
    return ExtRat(q_ * Rational(k + 1, k + 2));
  }

  std::string str() const { return inf_ ? "inf" : q_.str(); }

 private:
  bool inf_;
  Rational q_;
};

}  // namespace cucalc
