#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Pullback of two morphisms phi: A -> C, psi: B -> C: pairs (a, b) with
// phi(a) = psi(b), ordered and added componentwise. Pair construction checks
// the fiber constraint exactly.
//
// Canonical approximants must respect the constraint, so componentwise
// approximation is only a fast path; when it breaks the constraint the
// carrier defers to a pinned-approximant hook installed on one of the legs
// (the other leg's canonical chain supplies the pin values).
class PullbackCu final : public Semigroup {
 public:
  PullbackCu(MorphismPtr phi, MorphismPtr psi);
  static std::shared_ptr<const PullbackCu> make(MorphismPtr phi, MorphismPtr psi);

  const SemigroupPtr& leg_a() const { return phi_->source(); }
  const SemigroupPtr& leg_b() const { return psi_->source(); }
  const MorphismPtr& phi() const { return phi_; }
  const MorphismPtr& psi() const { return psi_; }

  Elem make_pair(const Elem& a, const Elem& b) const;
  const Elem& first(const Elem& x) const { return x.as<PairVal>().parts[0]; }
  const Elem& second(const Elem& x) const { return x.as<PairVal>().parts[1]; }

  // Explicit witness for non-compactness (constraint-checked); used because a
  // componentwise witness pair rarely satisfies the constraint.
  void set_witness(const Elem& w);

  std::optional<Elem> non_compact_witness() const override;
  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Elem zero_impl() const override;
  Elem add_impl(const Elem& x, const Elem& y) const override;
  bool leq_impl(const Elem& x, const Elem& y) const override;
  bool wb_impl(const Elem& x, const Elem& y) const override;
  Elem approximant_impl(const Elem& x, int k) const override;
  Elem inf_scale_impl(const Elem& x) const override;

 private:
  MorphismPtr phi_, psi_;
  std::optional<Elem> witness_;

  Elem pack(Elem a, Elem b) const;
};

using PullbackPtr = std::shared_ptr<const PullbackCu>;

}  // namespace cucalc
