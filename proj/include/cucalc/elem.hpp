#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "cucalc/rational.hpp"
#include "cucalc/scalars.hpp"

namespace cucalc {

class Semigroup;
using SemigroupPtr = std::shared_ptr<const Semigroup>;

class Elem;

// Compact(q): class of a projection, value q >= 0.
// Soft(t): non-compact element of value t in (0, inf].
struct UhfVal {
  bool compact;
  ExtRat value;
  friend bool operator==(const UhfVal& a, const UhfVal& b) {
    return a.compact == b.compact && a.value == b.value;
  }
};

// Step function on the circle [0,1): sorted distinct breakpoints, one arc
// value per open arc (b_i, b_{i+1 mod m}) and one point value per breakpoint.
// A constant function has no breakpoints and a single arc value.
struct StepVal {
  std::vector<Rational> breaks;
  std::vector<Elem> arcs;
  std::vector<Elem> pts;
};
bool operator==(const StepVal& a, const StepVal& b);

struct PairVal {
  std::vector<Elem> parts;  // exactly two
};
bool operator==(const PairVal& a, const PairVal& b);

using Payload =
    std::variant<ExtNat, ExtRat, UhfVal, std::vector<ExtNat>, std::vector<Elem>, StepVal, PairVal>;

// Immutable value of some semigroup. Cheap to copy; payloads are shared.
// Structural equality of canonical forms doubles as order equivalence.
class Elem {
 public:
  Elem() = default;
  Elem(SemigroupPtr owner, Payload p)
      : owner_(std::move(owner)), p_(std::make_shared<const Payload>(std::move(p))) {}

  bool is_null() const { return p_ == nullptr; }
  const Semigroup* owner() const { return owner_.get(); }
  SemigroupPtr owner_ptr() const { return owner_; }
  const Payload& payload() const { return *p_; }

  template <typename T>
  const T& as() const {
    return std::get<T>(*p_);
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    if (a.owner_.get() != b.owner_.get()) return false;
    if (a.p_ == b.p_) return true;
    if (!a.p_ || !b.p_) return false;
    return *a.p_ == *b.p_;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  SemigroupPtr owner_;
  std::shared_ptr<const Payload> p_;
};

inline bool operator==(const StepVal& a, const StepVal& b) {
  return a.breaks == b.breaks && a.arcs == b.arcs && a.pts == b.pts;
}

inline bool operator==(const PairVal& a, const PairVal& b) { return a.parts == b.parts; }

}  // namespace cucalc
