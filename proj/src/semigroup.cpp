#include "cucalc/semigroup.hpp"

namespace cucalc {

Elem Semigroup::sup_list(const std::vector<Elem>& ascending) const {
  if (ascending.empty()) return zero();
  for (size_t i = 0; i + 1 < ascending.size(); ++i) {
    if (!leq(ascending[i], ascending[i + 1]))
      throw PreconditionError("sup of a list requires ascending input");
  }
  return ascending.back();
}

Elem Semigroup::sup_chain(const Chain& c) const {
  if (c.is_finite()) return sup_list(c.finite_terms());
  if (c.has_closed_sup()) {
    check_owner(c.registered_sup());
    return c.registered_sup();
  }
  throw UnsupportedChainError("supremum requested for an unregistered infinite family");
}

Chain Semigroup::canonical_chain(const Elem& x) const {
  check_owner(x);
  return Chain::approximants(x);
}

Chain Chain::finite(std::vector<Elem> terms) {
  Chain c;
  c.kind_ = Kind::Finite;
  c.terms_ = std::move(terms);
  return c;
}

Chain Chain::approximants(const Elem& x) {
  Chain c;
  c.kind_ = Kind::Registered;
  c.sup_ = x;
  c.term_ = [x](int k) { return x.owner()->approximant(x, k); };
  return c;
}

Chain Chain::scaled(const Elem& x) {
  Chain c;
  c.kind_ = Kind::Registered;
  c.sup_ = x.owner()->nat_scale(ExtNat::infinity(), x);
  c.term_ = [x](int k) { return x.owner()->nat_scale(ExtNat(k), x); };
  return c;
}

Chain Chain::registered(std::function<Elem(int)> term, Elem sup) {
  Chain c;
  c.kind_ = Kind::Registered;
  c.term_ = std::move(term);
  c.sup_ = std::move(sup);
  return c;
}

Chain Chain::unregistered(std::function<Elem(int)> term) {
  Chain c;
  c.kind_ = Kind::Unregistered;
  c.term_ = std::move(term);
  return c;
}

Elem Chain::term(int k) const {
  if (k < 0) throw PreconditionError("chain index must be nonnegative");
  if (kind_ == Kind::Finite) {
    if (terms_.empty()) throw PreconditionError("term of an empty chain");
    size_t i = static_cast<size_t>(k);
    return terms_[i < terms_.size() ? i : terms_.size() - 1];
  }
  return term_(k);
}

}  // namespace cucalc
