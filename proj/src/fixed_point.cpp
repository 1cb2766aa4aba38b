#include "cucalc/fixed_point.hpp"

#include "cucalc/errors.hpp"

namespace cucalc {

FixedPointView::FixedPointView(SemigroupPtr base, std::vector<Generator> gens, Membership mode,
                               int approx_bound)
    : base_(std::move(base)), gens_(std::move(gens)), mode_(mode), approx_bound_(approx_bound) {
  if (!base_) throw PreconditionError("fixed points: null base");
  if (gens_.empty()) throw PreconditionError("fixed points: need at least one automorphism");
  if (approx_bound_ < 0) throw PreconditionError("fixed points: negative approximant bound");
  for (const Generator& g : gens_) {
    if (!g.forward || !g.inverse)
      throw PreconditionError("fixed points: automorphism without inverse");
    if (g.forward->source() != base_ || g.forward->target() != base_ ||
        g.inverse->source() != base_ || g.inverse->target() != base_)
      throw PreconditionError("fixed points: automorphism not an endomap of the base");
  }
  verify_generators();
  set_name("fixed:" + base_->name());
}

std::shared_ptr<const FixedPointView> FixedPointView::make(SemigroupPtr base,
                                                           std::vector<Generator> gens,
                                                           Membership mode, int approx_bound) {
  return std::make_shared<FixedPointView>(std::move(base), std::move(gens), mode, approx_bound);
}

void FixedPointView::verify_generators() const {
  Rng rng(0xF1C5EEDull);
  constexpr int kSamples = 12;
  static const int kLevels[] = {0, 1, 3, 7};
  for (const Generator& g : gens_) {
    const CuMorphism& f = *g.forward;
    const CuMorphism& inv = *g.inverse;
    if (!base_->equal(f(base_->zero()), base_->zero()))
      throw PreconditionError("fixed points: automorphism does not fix zero");
    for (int i = 0; i < kSamples; ++i) {
      Elem x = base_->sample(rng);
      Elem y = base_->sample(rng);
      if (!base_->equal(inv(f(x)), x) || !base_->equal(f(inv(x)), x))
        throw PreconditionError("fixed points: inverse law fails on a sample");
      if (!base_->equal(f(base_->add(x, y)), base_->add(f(x), f(y))))
        throw PreconditionError("fixed points: automorphism is not additive on a sample");
      if (!base_->leq(f(x), f(base_->add(x, y))))
        throw PreconditionError("fixed points: automorphism is not monotone on a sample");
      for (int k : kLevels) {
        if (!base_->equal(f(base_->approximant(x, k)), base_->approximant(f(x), k)))
          throw PreconditionError(
              "fixed points: automorphism does not commute with canonical approximants");
      }
    }
  }
}

bool FixedPointView::invariant(const Elem& base_elem) const {
  for (const Generator& g : gens_)
    if (!base_->equal((*g.forward)(base_elem), base_elem)) return false;
  return true;
}

bool FixedPointView::is_member(const Elem& base_elem) const {
  base_->check_owner(base_elem);
  if (!invariant(base_elem)) return false;
  if (mode_ == Membership::ApproximantInvariant) {
    for (int k = 0; k <= approx_bound_; ++k)
      if (!invariant(base_->approximant(base_elem, k))) return false;
  }
  return true;
}

Elem FixedPointView::pack(Elem base_elem) const {
  return Elem(self(), Payload(std::vector<Elem>{std::move(base_elem)}));
}

Elem FixedPointView::wrap(const Elem& base_elem) const {
  if (!is_member(base_elem))
    throw PreconditionError("fixed points: element is not invariant");
  return pack(base_elem);
}

Elem FixedPointView::symmetrize(const Elem& base_elem) const {
  base_->check_owner(base_elem);
  // Closure of {x} under all generators; generators permute the orbit, so the
  // orbit sum is invariant.
  std::vector<Elem> orbit{base_elem};
  constexpr std::size_t kOrbitCap = 128;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Generator& g : gens_) {
      Elem img = (*g.forward)(orbit[i]);
      bool seen = false;
      for (const Elem& o : orbit)
        if (base_->equal(o, img)) {
          seen = true;
          break;
        }
      if (!seen) {
        if (orbit.size() >= kOrbitCap)
          throw DomainError("fixed points: orbit too large to symmetrize");
        orbit.push_back(std::move(img));
      }
    }
  }
  Elem sum = base_->zero();
  for (const Elem& o : orbit) sum = base_->add(sum, o);
  return wrap(sum);
}

Elem FixedPointView::zero_impl() const { return pack(base_->zero()); }

Elem FixedPointView::add_impl(const Elem& x, const Elem& y) const {
  return pack(base_->add(value(x), value(y)));
}

bool FixedPointView::leq_impl(const Elem& x, const Elem& y) const {
  return base_->leq(value(x), value(y));
}

bool FixedPointView::wb_impl(const Elem& x, const Elem& y) const {
  return base_->way_below(value(x), value(y));
}

Elem FixedPointView::approximant_impl(const Elem& x, int k) const {
  // Equivariance (verified on construction) keeps approximants of members in
  // the subsemigroup.
  return pack(base_->approximant(value(x), k));
}

Elem FixedPointView::inf_scale_impl(const Elem& x) const {
  return pack(base_->nat_scale(ExtNat::infinity(), value(x)));
}

std::optional<Elem> FixedPointView::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  auto m = base_->meet(value(x), value(y));
  if (!m) return std::nullopt;
  if (!is_member(*m)) return std::nullopt;
  return pack(std::move(*m));
}

Chain FixedPointView::canonical_chain(const Elem& x) const {
  check_owner(x);
  // Base chains of invariant elements stay invariant (approximant equivariance
  // is verified on construction), so wrapping term-by-term is sound.
  Chain inner = base_->canonical_chain(value(x));
  auto view = std::static_pointer_cast<const FixedPointView>(self());
  return Chain::registered([view, inner](int k) { return view->pack(inner.term(k)); }, x);
}

std::optional<Elem> FixedPointView::non_compact_witness() const {
  auto w = base_->non_compact_witness();
  if (!w) return std::nullopt;
  try {
    return symmetrize(*w);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Elem FixedPointView::sample(Rng& rng) const {
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return symmetrize(base_->sample(rng));
    } catch (const DomainError&) {
      continue;
    }
  }
  return zero();
}

std::string FixedPointView::format(const Elem& x) const {
  check_owner(x);
  return base_->format(value(x));
}

Elem FixedPointView::parse(std::string_view text) const {
  Elem b = base_->parse(text);
  if (!is_member(b)) throw DomainError("fixed points: parsed element is not invariant");
  return pack(b);
}

}  // namespace cucalc
