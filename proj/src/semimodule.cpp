#include "cucalc/semimodule.hpp"

#include "cucalc/errors.hpp"

namespace cucalc {

CuSemimodule::CuSemimodule(std::string name, ActionKind kind, RepSemiringPtr ring,
                           SemigroupPtr carrier, ActFn act, bool unital, bool tensor_compatible)
    : name_(std::move(name)),
      kind_(kind),
      ring_(std::move(ring)),
      carrier_(std::move(carrier)),
      act_(std::move(act)),
      unital_(unital),
      tensor_(tensor_compatible) {
  if (!ring_ || !carrier_ || !act_) throw PreconditionError("semimodule: missing component");
  spot_check();
}

Elem CuSemimodule::act(const Elem& scalar, const Elem& x) const {
  ring_->check_owner(scalar);
  carrier_->check_owner(x);
  Elem out = act_(scalar, x);
  carrier_->check_owner(out);
  return out;
}

void CuSemimodule::spot_check() const {
  Rng rng(0xAC710Full);
  constexpr int kSamples = 4;
  for (int i = 0; i < kSamples; ++i) {
    Elem r = ring_->sample(rng);
    Elem s = ring_->sample(rng);
    Elem x = carrier_->sample(rng);
    Elem y = carrier_->sample(rng);
    if (!carrier_->equal(act(r, carrier_->zero()), carrier_->zero()))
      throw InvalidActionError("semimodule " + name_ + ": action does not fix carrier zero");
    if (!carrier_->equal(act(ring_->zero(), x), carrier_->zero()))
      throw InvalidActionError("semimodule " + name_ + ": zero scalar does not annihilate");
    if (!carrier_->equal(act(ring_->add(r, s), x), carrier_->add(act(r, x), act(s, x))))
      throw InvalidActionError("semimodule " + name_ + ": not additive in the scalar");
    if (!carrier_->equal(act(r, carrier_->add(x, y)), carrier_->add(act(r, x), act(r, y))))
      throw InvalidActionError("semimodule " + name_ + ": not additive in the carrier");
    if (unital_ && !carrier_->equal(act(ring_->one(), x), x))
      throw InvalidActionError("semimodule " + name_ + ": unit law fails");
    if (tensor_ && !carrier_->equal(act(ring_->tensor(r, s), x), act(r, act(s, x))))
      throw InvalidActionError("semimodule " + name_ + ": tensor law fails");
  }
}

std::shared_ptr<const CuSemimodule> CuSemimodule::make_trivial(RepSemiringPtr ring,
                                                               SemigroupPtr carrier) {
  RepSemiringPtr rr = ring;
  SemigroupPtr cc = carrier;
  ActFn act = [rr, cc](const Elem& scalar, const Elem& x) {
    return cc->nat_scale(rr->dimension(scalar), x);
  };
  return std::make_shared<CuSemimodule>("trivial:" + carrier->name(), ActionKind::Trivial,
                                        std::move(ring), std::move(carrier), std::move(act), true,
                                        true);
}

std::shared_ptr<const CuSemimodule> CuSemimodule::make_dual_translation(RepSemiringPtr ring,
                                                                        FnCuPtr carrier) {
  if (!ring->group().abelian())
    throw PreconditionError("dual translation action: group must be abelian");
  if (carrier->cyclic_factors().empty())
    throw PreconditionError("dual translation action: carrier has no group structure");
  if (carrier->size() != ring->group().order() || carrier->size() != ring->num_irreps())
    throw PreconditionError("dual translation action: carrier index set must match the group");
  FnCuPtr fc = carrier;
  IrrepActFn irrep_act = [fc](int tau, const Elem& x) { return fc->translate(tau, x); };
  return make_from_irrep_action("dual-translation:" + carrier->name(),
                                ActionKind::DualTranslation, std::move(ring), carrier, irrep_act,
                                true, true);
}

std::shared_ptr<const CuSemimodule> CuSemimodule::make_tensor_scaling(RepSemiringPtr ring,
                                                                      FnCuPtr carrier) {
  if (carrier->size() != ring->num_irreps())
    throw PreconditionError("scaling action: carrier index set must match the irreps");
  RepSemiringPtr rr = ring;
  FnCuPtr fc = carrier;
  ActFn act = [rr, fc](const Elem& scalar, const Elem& x) {
    const auto& m = rr->vec(scalar);
    const auto& vals = fc->values(x);
    std::vector<Elem> out;
    out.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
      out.push_back(fc->base()->nat_scale(m[i], vals[i]));
    return fc->make_fn(std::move(out));
  };
  return std::make_shared<CuSemimodule>("scaling:" + carrier->name(), ActionKind::TensorScaling,
                                        std::move(ring), carrier, std::move(act), false, false);
}

std::shared_ptr<const CuSemimodule> CuSemimodule::make_from_irrep_action(
    std::string name, ActionKind kind, RepSemiringPtr ring, SemigroupPtr carrier,
    IrrepActFn irrep_act, bool unital, bool tensor_compatible) {
  RepSemiringPtr rr = ring;
  SemigroupPtr cc = carrier;
  ActFn act = [rr, cc, irrep_act](const Elem& scalar, const Elem& x) {
    const auto& m = rr->vec(scalar);
    Elem out = cc->zero();
    for (std::size_t tau = 0; tau < m.size(); ++tau) {
      if (m[tau] == ExtNat(0)) continue;
      out = cc->add(out, cc->nat_scale(m[tau], irrep_act((int)tau, x)));
    }
    return out;
  };
  return std::make_shared<CuSemimodule>(std::move(name), kind, std::move(ring),
                                        std::move(carrier), std::move(act), unital,
                                        tensor_compatible);
}

std::shared_ptr<const CuSemimodule> CuSemimodule::make_custom(std::string name, ActionKind kind,
                                                              RepSemiringPtr ring,
                                                              SemigroupPtr carrier, ActFn act,
                                                              bool unital,
                                                              bool tensor_compatible) {
  return std::make_shared<CuSemimodule>(std::move(name), kind, std::move(ring),
                                        std::move(carrier), std::move(act), unital,
                                        tensor_compatible);
}

}  // namespace cucalc
