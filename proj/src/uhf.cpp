#include "cucalc/uhf.hpp"

#include <map>
#include <mutex>

#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace pu = parse_util;

UhfCu::UhfCu(int n) : Semigroup("uhf" + std::to_string(n)), n_(n) {
  if (n < 2) throw DomainError("UHF base must be at least 2");
}

std::shared_ptr<const UhfCu> UhfCu::instance(int n) {
  static std::map<int, std::shared_ptr<const UhfCu>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_shared<UhfCu>(n)).first;
  return it->second;
}

bool UhfCu::denominator_supported(const Rational& q) const {
  long long d = q.den();
  while (d > 1) {
    long long g = std::gcd(d, static_cast<long long>(n_));
    if (g == 1) return false;
    while (d % g == 0) d /= g;
  }
  return true;
}

Elem UhfCu::compact(const Rational& value) const {
  if (value.is_negative()) throw DomainError("compact value must be nonnegative");
  if (!denominator_supported(value))
    throw DomainError("compact value " + value.str() + " has unsupported denominator for " +
                      name());
  return Elem(self(), Payload(UhfVal{true, ExtRat(value)}));
}

Elem UhfCu::soft(const ExtRat& value) const {
  if (value.is_zero()) throw DomainError("soft value must be positive");
  return Elem(self(), Payload(UhfVal{false, value}));
}

Elem UhfCu::make(const UhfVal& v) const {
  if (v.compact) {
    if (v.value.is_infinite()) throw DomainError("compact value must be finite");
    return compact(v.value.finite_value());
  }
  return soft(v.value);
}

Elem UhfCu::add_impl(const Elem& x, const Elem& y) const {
  const UhfVal& a = val(x);
  const UhfVal& b = val(y);
  if (a.compact && b.compact)
    return compact(a.value.finite_value() + b.value.finite_value());
  // A soft summand absorbs compacts: the result is soft of the summed value,
  // except that adding to value 0 changes nothing.
  ExtRat sum = a.value + b.value;
  if (a.compact && a.value.is_zero()) return y;
  if (b.compact && b.value.is_zero()) return x;
  return soft(sum);
}

bool UhfCu::leq_impl(const Elem& x, const Elem& y) const {
  const UhfVal& a = val(x);
  const UhfVal& b = val(y);
  if (a.compact == b.compact) return a.value <= b.value;
  if (!a.compact) return a.value <= b.value;  // Soft(t) <= Compact(q) iff t <= q
  if (a.value.is_zero()) return true;
  return a.value < b.value;  // Compact(q) <= Soft(t) iff q < t
}

bool UhfCu::wb_impl(const Elem& x, const Elem& y) const {
  const UhfVal& a = val(x);
  const UhfVal& b = val(y);
  if (a.compact && a.value.is_zero()) return true;
  if (a.compact || b.compact) return leq_impl(x, y);
  return !a.value.is_infinite() && a.value < b.value;
}

Elem UhfCu::approximant_impl(const Elem& x, int k) const {
  const UhfVal& a = val(x);
  if (a.compact) return x;
  if (a.value.is_infinite()) return soft(ExtRat(Rational(k + 1)));
  return soft(a.value.approximant(k));  // positive since the value is
}

Elem UhfCu::inf_scale_impl(const Elem& x) const {
  const UhfVal& a = val(x);
  if (a.compact && a.value.is_zero()) return zero();
  return soft(ExtRat::infinity());
}

std::optional<Elem> UhfCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  return leq_impl(x, y) ? x : y;
}

Elem UhfCu::sample(Rng& rng) const {
  int pick = static_cast<int>(rng.below(8));
  if (pick == 0) return zero();
  if (pick <= 3) {
    long long e = rng.range(0, 2);
    long long den = 1;
    for (long long i = 0; i < e; ++i) den *= n_;
    return compact(Rational(rng.range(0, 3 * den), den));
  }
  if (pick == 4) return soft(ExtRat::infinity());
  return soft(ExtRat(Rational(rng.range(1, 12), rng.range(1, 4))));
}

std::string UhfCu::format(const Elem& x) const {
  const UhfVal& a = val(x);
  return name() + (a.compact ? ":compact:" : ":soft:") + a.value.str();
}

Elem UhfCu::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, name() + ":"))
    throw ParseError("expected " + name() + ":compact:<q> or " + name() + ":soft:<t|inf>");
  if (pu::consume_prefix(s, "compact:")) {
    ExtRat v = pu::parse_extrat(s);
    if (v.is_infinite()) throw ParseError("compact value must be finite");
    return compact(v.finite_value());
  }
  if (pu::consume_prefix(s, "soft:")) return soft(pu::parse_extrat(s));
  throw ParseError("expected compact: or soft: after '" + name() + ":'");
}

}  // namespace cucalc
