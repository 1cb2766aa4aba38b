#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Subsemigroup of elements fixed by a finite set of automorphisms of a base
// carrier. Generators are supplied with their inverses and verified on
// construction (inverse laws, additivity, zero, monotonicity, and
// equivariance with canonical approximants, all on seeded samples).
//
// Two membership notions:
//   Invariant            - x is fixed by every generator.
//   ApproximantInvariant - x and its canonical approximants up to a bound are
//                          fixed. With equivariant automorphisms the two
//                          coincide; the check stays honest regardless.
class FixedPointView final : public Semigroup {
 public:
  enum class Membership { Invariant, ApproximantInvariant };

  struct Generator {
    MorphismPtr forward;
    MorphismPtr inverse;
  };

  FixedPointView(SemigroupPtr base, std::vector<Generator> gens,
                 Membership mode = Membership::ApproximantInvariant, int approx_bound = 8);
  static std::shared_ptr<const FixedPointView> make(
      SemigroupPtr base, std::vector<Generator> gens,
      Membership mode = Membership::ApproximantInvariant, int approx_bound = 8);

  const SemigroupPtr& base() const { return base_; }
  const std::vector<Generator>& generators() const { return gens_; }
  Membership mode() const { return mode_; }

  bool is_member(const Elem& base_elem) const;
  // Wraps a base element, checking membership.
  Elem wrap(const Elem& base_elem) const;
  const Elem& value(const Elem& x) const { return x.as<std::vector<Elem>>()[0]; }

  // Orbit sum under the generated group: always a member (finite orbits only).
  Elem symmetrize(const Elem& base_elem) const;

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;
  Chain canonical_chain(const Elem& x) const override;

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
  SemigroupPtr base_;
  std::vector<Generator> gens_;
  Membership mode_;
  int approx_bound_;

  Elem pack(Elem base_elem) const;
  bool invariant(const Elem& base_elem) const;
  void verify_generators() const;
};

using FixedPointPtr = std::shared_ptr<const FixedPointView>;

}  // namespace cucalc
