#include "cucalc/pullback.hpp"

#include "cucalc/errors.hpp"
#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace pu = parse_util;

PullbackCu::PullbackCu(MorphismPtr phi, MorphismPtr psi) : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!phi_ || !psi_) throw PreconditionError("pullback: null leg morphism");
  if (phi_->target() != psi_->target())
    throw PreconditionError("pullback: legs must share a target");
  set_name("pullback:" + phi_->source()->name() + "*" + psi_->source()->name());
}

std::shared_ptr<const PullbackCu> PullbackCu::make(MorphismPtr phi, MorphismPtr psi) {
  return std::make_shared<PullbackCu>(std::move(phi), std::move(psi));
}

Elem PullbackCu::pack(Elem a, Elem b) const {
  return Elem(self(), Payload(PairVal{{std::move(a), std::move(b)}}));
}

Elem PullbackCu::make_pair(const Elem& a, const Elem& b) const {
  phi_->source()->check_owner(a);
  psi_->source()->check_owner(b);
  const auto& target = phi_->target();
  if (!target->equal((*phi_)(a), (*psi_)(b)))
    throw PreconditionError("pullback: pair violates the fiber constraint");
  return pack(a, b);
}

void PullbackCu::set_witness(const Elem& w) {
  check_owner(w);
  witness_ = w;
}

std::optional<Elem> PullbackCu::non_compact_witness() const { return witness_; }

Elem PullbackCu::zero_impl() const {
  return pack(phi_->source()->zero(), psi_->source()->zero());
}

Elem PullbackCu::add_impl(const Elem& x, const Elem& y) const {
  return pack(phi_->source()->add(first(x), first(y)), psi_->source()->add(second(x), second(y)));
}

bool PullbackCu::leq_impl(const Elem& x, const Elem& y) const {
  return phi_->source()->leq(first(x), first(y)) && psi_->source()->leq(second(x), second(y));
}

bool PullbackCu::wb_impl(const Elem& x, const Elem& y) const {
  return phi_->source()->way_below(first(x), first(y)) &&
         psi_->source()->way_below(second(x), second(y));
}

Elem PullbackCu::approximant_impl(const Elem& x, int k) const {
  const auto& A = phi_->source();
  const auto& B = psi_->source();
  const auto& C = phi_->target();
  const Elem& a = first(x);
  const Elem& b = second(x);

  // A leg with a pinned hook handles every level: mixing hook terms with
  // componentwise terms breaks the rapid-increase of consecutive levels, so
  // the componentwise form is only used when no hook is installed at all.
  if (phi_->pinned_approx()) {
    auto chain = [&](int i) { return (*psi_)(B->approximant(b, i)); };
    Elem pinned = phi_->pinned_approx()(a, chain, k);
    return make_pair(pinned, B->approximant(b, k));
  }
  if (psi_->pinned_approx()) {
    auto chain = [&](int i) { return (*phi_)(A->approximant(a, i)); };
    Elem pinned = psi_->pinned_approx()(b, chain, k);
    return make_pair(A->approximant(a, k), pinned);
  }

  Elem ak = A->approximant(a, k);
  Elem bk = B->approximant(b, k);
  if (C->equal((*phi_)(ak), (*psi_)(bk))) return pack(std::move(ak), std::move(bk));
  throw DomainError("pullback: componentwise approximant breaks the constraint and no leg provides a pinned approximant");
}

Elem PullbackCu::inf_scale_impl(const Elem& x) const {
  return pack(phi_->source()->nat_scale(ExtNat::infinity(), first(x)),
              psi_->source()->nat_scale(ExtNat::infinity(), second(x)));
}

Elem PullbackCu::sample(Rng& rng) const {
  if (rng.chance(1, 8)) return zero();
  const auto& B = psi_->source();
  if (phi_->section()) {
    Elem b = B->sample(rng);
    Elem t = (*psi_)(b);
    Elem a = phi_->section()(t, rng);
    return make_pair(a, b);
  }
  if (psi_->section()) {
    Elem a = phi_->source()->sample(rng);
    Elem t = (*phi_)(a);
    Elem b = psi_->section()(t, rng);
    return make_pair(a, b);
  }
  throw DomainError("pullback: sampling requires a section on one leg");
}

std::string PullbackCu::format(const Elem& x) const {
  check_owner(x);
  return "pb(" + phi_->source()->format(first(x)) + " | " + psi_->source()->format(second(x)) + ")";
}

Elem PullbackCu::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, "pb(") || s.empty() || s.back() != ')')
    throw ParseError("pullback literal: expected pb(<left> | <right>)");
  s.remove_suffix(1);
  auto parts = pu::split_top(s, '|');
  if (parts.size() != 2) throw ParseError("pullback literal: expected two '|'-separated components");
  Elem a = phi_->source()->parse(pu::trim(parts[0]));
  Elem b = psi_->source()->parse(pu::trim(parts[1]));
  try {
    return make_pair(a, b);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("pullback literal: ") + e.what());
  }
}

}  // namespace cucalc
