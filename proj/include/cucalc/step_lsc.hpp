#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Lower semicontinuous step functions on the circle [0,1) with values in a
// totally ordered base semigroup (one providing meet). Data: sorted distinct
// rational breakpoints, one value per open arc, one value per breakpoint,
// with each point value below its two adjacent arc values. Canonical form
// merges removable breakpoints, so structural equality is function equality.
//
// Pointwise structure throughout. Way-below is decided on the common
// refinement: every arc value of f must be way-below the minimum of g over
// the closed arc, and every point value of f way-below g's point value.
//
// Canonical approximants approximate values pointwise (with a meet repair at
// breakpoints) and then erode by delta_k = min_gap/(k+3), shrinking every
// high arc away from its endpoints; this yields a rapidly increasing family
// with the original function as supremum.
class StepLscCu final : public Semigroup {
 public:
  explicit StepLscCu(SemigroupPtr base);
  static std::shared_ptr<const StepLscCu> make(SemigroupPtr base);

  const SemigroupPtr& base() const { return base_; }

  Elem constant(const Elem& value) const;
  // breaks sorted, distinct, in [0,1); arcs.size()==pts.size()==breaks.size().
  Elem make_step(std::vector<Rational> breaks, std::vector<Elem> arcs,
                 std::vector<Elem> pts) const;

  const StepVal& val(const Elem& f) const { return f.as<StepVal>(); }
  bool is_constant(const Elem& f) const { return val(f).breaks.empty(); }

  Elem eval(const Elem& f, const Rational& x) const;
  // rotate(f, r)(x) = f(x + r).
  Elem rotate(const Elem& f, const Rational& r) const;

  // f with value forced to `value` at each given point: point values set and
  // adjacent arcs raised to their join with `value`. Used to build sampled
  // functions with prescribed evaluations.
  Elem force_value_at(const Elem& f, const std::vector<Rational>& points,
                      const Elem& value) const;

  // Canonical approximant computed after refining f at the given anchor
  // points, so the erosion plateaus are centered on them.
  Elem anchored_approximant(const Elem& f, int k, const std::vector<Rational>& anchors) const;

  // k-th term of the approximant family of f pinned at the anchors: its value
  // at every anchor is exactly target_chain(k) (a base-valued chain increasing
  // rapidly to f's anchor value). Deterministic in (f, anchors, chain, k).
  Elem pinned_approximant(const Elem& f, const std::vector<Rational>& anchors,
                          const std::function<Elem(int)>& target_chain, int k) const;

  // Ascending family with common breakpoints: values approximated pointwise
  // (no erosion), supremum f. Registered closed form for sup_chain.
  Chain value_approximant_family(const Elem& f) const;
  Chain canonical_chain(const Elem& f) const override { return value_approximant_family(f); }

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& f) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Elem zero_impl() const override { return constant(base_->zero()); }
  Elem add_impl(const Elem& x, const Elem& y) const override;
  bool leq_impl(const Elem& x, const Elem& y) const override;
  bool wb_impl(const Elem& x, const Elem& y) const override;
  Elem approximant_impl(const Elem& x, int k) const override;
  Elem inf_scale_impl(const Elem& x) const override;

 private:
  SemigroupPtr base_;

  Elem base_meet(const Elem& a, const Elem& b) const;
  Elem base_join(const Elem& a, const Elem& b) const;
  StepVal canon(StepVal v) const;
  Elem finish(StepVal v) const { return Elem(self(), Payload(canon(std::move(v)))); }
  void validate(const StepVal& v) const;
  StepVal refine(const StepVal& v, const std::vector<Rational>& extra) const;
  std::pair<StepVal, StepVal> common_refine(const StepVal& a, const StepVal& b) const;
  Rational min_gap(const std::vector<Rational>& breaks) const;
  // Pointwise value approximation with meet repair; input must be valid.
  StepVal value_approx(const StepVal& v, int k) const;
  StepVal erode(const StepVal& v, const Rational& delta) const;
  StepVal approx_core(const StepVal& v, int k) const;
};

using StepLscPtr = std::shared_ptr<const StepLscCu>;

}  // namespace cucalc
