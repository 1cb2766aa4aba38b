#include "cucalc/base_semigroups.hpp"

#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace pu = parse_util;

SemigroupPtr NatCu::instance() {
  static SemigroupPtr s = std::make_shared<NatCu>();
  return s;
}

std::optional<Elem> NatCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  return make(value(x).min(value(y)));
}

std::optional<Elem> NatCu::non_compact_witness() const { return make(ExtNat::infinity()); }

Elem NatCu::sample(Rng& rng) const {
  if (rng.chance(1, 6)) return make(ExtNat::infinity());
  return make(ExtNat(rng.range(0, 9)));
}

std::string NatCu::format(const Elem& x) const { return "nat:" + value(x).str(); }

Elem NatCu::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, "nat:")) throw ParseError("expected nat:<k|inf>");
  return make(pu::parse_extnat(s));
}

SemigroupPtr RatCu::instance() {
  static SemigroupPtr s = std::make_shared<RatCu>();
  return s;
}

std::optional<Elem> RatCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  return make(value(x).min(value(y)));
}

std::optional<Elem> RatCu::non_compact_witness() const { return make(ExtRat(Rational(1))); }

Elem RatCu::sample(Rng& rng) const {
  if (rng.chance(1, 8)) return make(ExtRat::infinity());
  if (rng.chance(1, 8)) return make(ExtRat(Rational(0)));
  return make(ExtRat(Rational(rng.range(1, 12), rng.range(1, 6))));
}

std::string RatCu::format(const Elem& x) const { return "rat:" + value(x).str(); }

Elem RatCu::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, "rat:")) throw ParseError("expected rat:<p>/<q> or rat:inf");
  return make(pu::parse_extrat(s));
}

}  // namespace cucalc
