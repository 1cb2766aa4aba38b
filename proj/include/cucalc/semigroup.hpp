#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cucalc/elem.hpp"
#include "cucalc/errors.hpp"
#include "cucalc/rng.hpp"

namespace cucalc {

class Chain;

// Abstract ordered abelian monoid with the interface the axiom suite drives:
// zero, add, the partial order, compact containment (way-below), canonical
// approximants, suprema of supported chains, and scaling by extended naturals.
//
// Elements are normalized on construction, so structural equality is order
// equivalence; antisymmetry needs no quotient.
class Semigroup : public std::enable_shared_from_this<Semigroup> {
 public:
  explicit Semigroup(std::string name) : name_(std::move(name)) {}
  virtual ~Semigroup() = default;

  const std::string& name() const { return name_; }

  Elem zero() const { return zero_impl(); }

  Elem add(const Elem& x, const Elem& y) const {
    check_owner(x);
    check_owner(y);
    return add_impl(x, y);
  }

  bool leq(const Elem& x, const Elem& y) const {
    check_owner(x);
    check_owner(y);
    return leq_impl(x, y);
  }

  bool equal(const Elem& x, const Elem& y) const {
    check_owner(x);
    check_owner(y);
    return x == y;
  }

  bool way_below(const Elem& x, const Elem& y) const {
    check_owner(x);
    check_owner(y);
    return wb_impl(x, y);
  }

  // k-th canonical approximant of x: approximant(x,k) << approximant(x,k+1),
  // approximant(x,k) <= x, and the family's supremum is x.
  Elem approximant(const Elem& x, int k) const {
    check_owner(x);
    if (k < 0) throw PreconditionError("approximant index must be nonnegative");
    return approximant_impl(x, k);
  }

  // n copies of x; n = inf gives the supremum of the k*x chain in closed form.
  Elem nat_scale(const ExtNat& n, const Elem& x) const {
    check_owner(x);
    if (n.is_zero()) return zero();
    if (n.is_infinite()) return inf_scale_impl(x);
    Elem acc = x;
    for (long long i = 1; i < n.finite_value(); ++i) acc = add_impl(acc, x);
    return acc;
  }

  // Least upper bound of a finite ascending list (its last element).
  Elem sup_list(const std::vector<Elem>& ascending) const;

  // Least upper bound of a supported chain; throws UnsupportedChainError for
  // infinite families without a registered closed form.
  Elem sup_chain(const Chain& c) const;

  // Preferred registered chain with supremum x, used by the independent sup
  // verifier. Defaults to the canonical approximant family; carriers whose
  // canonical approximants deform structure (erosion) override this with a
  // structure-preserving family.
  virtual Chain canonical_chain(const Elem& x) const;

  void check_owner(const Elem& x) const {
    if (x.is_null() || x.owner() != this)
      throw DomainError("element does not belong to semigroup '" + name_ + "'");
  }

  // Capabilities ------------------------------------------------------------

  // Binary minimum, available on totally ordered carriers (and products of
  // them). Required of step-function base semigroups.
  virtual std::optional<Elem> meet(const Elem& x, const Elem& y) const {
    (void)x;
    (void)y;
    return std::nullopt;
  }

  // A declared non-compact element, used by the sanity probe that catches a
  // way-below collapsed onto the order.
  virtual std::optional<Elem> non_compact_witness() const { return std::nullopt; }

  struct Atoms {
    bool none;      // declared atomless
    ExtNat count;   // number of minimal nonzero compact elements when !none
  };
  virtual std::optional<Atoms> atoms() const { return std::nullopt; }

  // Sampling / formatting ----------------------------------------------------

  virtual Elem sample(Rng& rng) const = 0;
  virtual std::string format(const Elem& x) const = 0;
  virtual Elem parse(std::string_view text) const {
    (void)text;
    throw ParseError("no literal syntax for semigroup '" + name_ + "'");
  }

 protected:
  Semigroup() = default;
  void set_name(std::string n) { name_ = std::move(n); }

  virtual Elem zero_impl() const = 0;
  virtual Elem add_impl(const Elem& x, const Elem& y) const = 0;
  virtual bool leq_impl(const Elem& x, const Elem& y) const = 0;
  virtual bool wb_impl(const Elem& x, const Elem& y) const = 0;
  virtual Elem approximant_impl(const Elem& x, int k) const = 0;
  virtual Elem inf_scale_impl(const Elem& x) const = 0;

  SemigroupPtr self() const { return shared_from_this(); }

 private:
  std::string name_;
};

// Increasing sequence handed to sup_chain: either a finite ascending list
// (supremum = last element) or a registered parametric family carrying its
// closed-form supremum (canonical approximant families, scaling chains).
// Arbitrary term functions stay unregistered and are only probed term-by-term.
class Chain {
 public:
  static Chain finite(std::vector<Elem> terms);
  static Chain approximants(const Elem& x);
  static Chain scaled(const Elem& x);  // term(k) = k*x
  static Chain registered(std::function<Elem(int)> term, Elem sup);
  static Chain unregistered(std::function<Elem(int)> term);

  Elem term(int k) const;
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool has_closed_sup() const { return kind_ != Kind::Unregistered; }
  const std::vector<Elem>& finite_terms() const { return terms_; }
  const Elem& registered_sup() const { return sup_; }

 private:
  enum class Kind { Finite, Registered, Unregistered };
  Kind kind_ = Kind::Finite;
  std::vector<Elem> terms_;
  std::function<Elem(int)> term_;
  Elem sup_;
};

// Structure-preserving map between semigroups: additive, order preserving,
// zero preserving, preserving suprema of supported chains and compact
// containment. The laws are enforced by the verification suite, not the type.
class CuMorphism {
 public:
  // Given the target values t_k = (target chain)(k), produce the k-th term of
  // an approximant family for `a` whose image under this morphism is exactly
  // t_k. Used by pullbacks to approximate constrained pairs.
  using PinnedApprox =
      std::function<Elem(const Elem& a, const std::function<Elem(int)>& target_chain, int k)>;
  // Produce some preimage of a target value, for sampling constrained pairs.
  using Section = std::function<Elem(const Elem& target, Rng& rng)>;

  CuMorphism(std::string name, SemigroupPtr source, SemigroupPtr target,
             std::function<Elem(const Elem&)> fn)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_(std::move(target)),
        fn_(std::move(fn)) {}

  const std::string& name() const { return name_; }
  const SemigroupPtr& source() const { return source_; }
  const SemigroupPtr& target() const { return target_; }

  Elem operator()(const Elem& x) const {
    if (x.owner() != source_.get())
      throw DomainError("morphism '" + name_ + "' applied outside its source");
    return fn_(x);
  }

  void set_pinned_approx(PinnedApprox h) { pinned_ = std::move(h); }
  const PinnedApprox& pinned_approx() const { return pinned_; }
  void set_section(Section s) { section_ = std::move(s); }
  const Section& section() const { return section_; }

 private:
  std::string name_;
  SemigroupPtr source_;
  SemigroupPtr target_;
  std::function<Elem(const Elem&)> fn_;
  PinnedApprox pinned_;
  Section section_;
};

using MorphismPtr = std::shared_ptr<CuMorphism>;

}  // namespace cucalc
