#pragma once

#include "cucalc/fn_product.hpp"
#include "cucalc/rep_semiring.hpp"
#include "cucalc/semigroup.hpp"

namespace cucalc {

enum class ActionKind { Trivial, DualTranslation, TensorScaling, Custom };

// A carrier semigroup together with an action of a representation semiring.
// Factories run seeded spot checks (zero laws, distributivity in both slots,
// and the unit/tensor laws when the action claims them) and throw
// InvalidActionError on failure; the full axiom battery lives in the
// verification runner.
class CuSemimodule {
 public:
  using ActFn = std::function<Elem(const Elem& scalar, const Elem& x)>;
  using IrrepActFn = std::function<Elem(int irrep, const Elem& x)>;

  // act(r, x) = dimension(r) . x; unital and tensor-compatible because
  // dimension is multiplicative under the fusion product.
  static std::shared_ptr<const CuSemimodule> make_trivial(RepSemiringPtr ring,
                                                          SemigroupPtr carrier);

  // Abelian duality: irreps translate the coordinates of a function carrier
  // indexed by the same group (carrier factors must match the group's).
  static std::shared_ptr<const CuSemimodule> make_dual_translation(RepSemiringPtr ring,
                                                                   FnCuPtr carrier);

  // act(mu, f)(pi) = m_pi(mu) . f(pi) on a carrier indexed by the irreps.
  // Satisfies the order axioms but claims neither the unit nor the tensor law.
  static std::shared_ptr<const CuSemimodule> make_tensor_scaling(RepSemiringPtr ring,
                                                                 FnCuPtr carrier);

  // Additive extension of a per-irrep action:
  // act(r, x) = sum over irreps tau of m_tau(r) . irrep_act(tau, x).
  static std::shared_ptr<const CuSemimodule> make_from_irrep_action(
      std::string name, ActionKind kind, RepSemiringPtr ring, SemigroupPtr carrier,
      IrrepActFn irrep_act, bool unital, bool tensor_compatible);

  static std::shared_ptr<const CuSemimodule> make_custom(std::string name, ActionKind kind,
                                                         RepSemiringPtr ring,
                                                         SemigroupPtr carrier, ActFn act,
                                                         bool unital, bool tensor_compatible);

  const std::string& name() const { return name_; }
  ActionKind kind() const { return kind_; }
  const RepSemiringPtr& ring() const { return ring_; }
  const SemigroupPtr& carrier() const { return carrier_; }
  bool claims_unital() const { return unital_; }
  bool claims_tensor_compat() const { return tensor_; }

  Elem act(const Elem& scalar, const Elem& x) const;

  CuSemimodule(std::string name, ActionKind kind, RepSemiringPtr ring, SemigroupPtr carrier,
               ActFn act, bool unital, bool tensor_compatible);

 private:
  std::string name_;
  ActionKind kind_;
  RepSemiringPtr ring_;
  SemigroupPtr carrier_;
  ActFn act_;
  bool unital_;
  bool tensor_;

  void spot_check() const;
};

using SemimodulePtr = std::shared_ptr<const CuSemimodule>;

}  // namespace cucalc
