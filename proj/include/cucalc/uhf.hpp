#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Z[1/n]-valued compact classes together with (0,inf]-valued soft elements.
// Totally ordered: Soft(t) <= Compact(q) iff t <= q, Compact(q) <= Soft(t)
// iff q < t, so Soft(v) sits immediately below Compact(v).
//
// Way-below: Compact(0) below everything; a pair with a compact member is
// way-below iff it is below; Soft(t) << Soft(u) iff t finite and t < u.
class UhfCu final : public Semigroup {
 public:
  explicit UhfCu(int n);
  static std::shared_ptr<const UhfCu> instance(int n);

  int base() const { return n_; }

  // value must be >= 0 with denominator dividing a power of n.
  Elem compact(const Rational& value) const;
  // value in (0, inf].
  Elem soft(const ExtRat& value) const;
  Elem make(const UhfVal& v) const;

  const UhfVal& val(const Elem& x) const { return x.as<UhfVal>(); }
  bool is_compact_elem(const Elem& x) const { return val(x).compact; }
  ExtRat value_of(const Elem& x) const { return val(x).value; }

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override { return soft(ExtRat(Rational(1))); }
  // Every nonzero compact splits (q = q/n + ... ), so there is no minimal one.
  std::optional<Atoms> atoms() const override { return Atoms{true, ExtNat(0)}; }

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;
  Elem parse(std::string_view text) const override;

 protected:
  Elem zero_impl() const override { return compact(Rational(0)); }
  Elem add_impl(const Elem& x, const Elem& y) const override;
  bool leq_impl(const Elem& x, const Elem& y) const override;
  bool wb_impl(const Elem& x, const Elem& y) const override;
  Elem approximant_impl(const Elem& x, int k) const override;
  Elem inf_scale_impl(const Elem& x) const override;

 private:
  int n_;
  bool denominator_supported(const Rational& q) const;
};

}  // namespace cucalc
