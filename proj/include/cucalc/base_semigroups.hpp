#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Extended naturals {0,1,...,inf}. Every finite element is compact; the
// canonical approximants of inf are 0,1,2,...
class NatCu final : public Semigroup {
 public:
  NatCu() : Semigroup("nat") {}
  static SemigroupPtr instance();

  Elem make(const ExtNat& v) const { return Elem(self(), Payload(v)); }
  const ExtNat& value(const Elem& x) const { return x.as<ExtNat>(); }

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;
  std::optional<Atoms> atoms() const override { return Atoms{false, ExtNat(1)}; }

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Elem zero_impl() const override { return make(ExtNat(0)); }
  Elem add_impl(const Elem& x, const Elem& y) const override {
    return make(value(x) + value(y));
  }
  bool leq_impl(const Elem& x, const Elem& y) const override { return value(x) <= value(y); }
  bool wb_impl(const Elem& x, const Elem& y) const override {
    return value(x).way_below(value(y));
  }
  Elem approximant_impl(const Elem& x, int k) const override {
    return make(value(x).approximant(k));
  }
  Elem inf_scale_impl(const Elem& x) const override {
    return value(x).is_zero() ? zero() : make(ExtNat::infinity());
  }
};

// Extended nonnegative rationals [0, inf] with exact arithmetic. The only
// compact element is 0; approximants of q are q*(k+1)/(k+2).
class RatCu final : public Semigroup {
 public:
  RatCu() : Semigroup("rat") {}
  static SemigroupPtr instance();

  Elem make(const ExtRat& v) const { return Elem(self(), Payload(v)); }
  const ExtRat& value(const Elem& x) const { return x.as<ExtRat>(); }

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;
  std::optional<Atoms> atoms() const override { return Atoms{true, ExtNat(0)}; }

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Elem zero_impl() const override { return make(ExtRat(Rational(0))); }
  Elem add_impl(const Elem& x, const Elem& y) const override {
    return make(value(x) + value(y));
  }
  bool leq_impl(const Elem& x, const Elem& y) const override { return value(x) <= value(y); }
  bool wb_impl(const Elem& x, const Elem& y) const override {
    return value(x).way_below(value(y));
  }
  Elem approximant_impl(const Elem& x, int k) const override {
    return make(value(x).approximant(k));
  }
  Elem inf_scale_impl(const Elem& x) const override {
    return value(x).is_zero() ? zero() : make(ExtRat::infinity());
  }
};

}  // namespace cucalc
