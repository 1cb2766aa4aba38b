#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Functions from a finite index set K into a base semigroup, with pointwise
// structure. Way-below is componentwise (finite products preserve compact
// containment coordinatewise). When K carries an abelian group structure
// (cyclic factors, lexicographic indexing), translation by a group element
// is available and is a semigroup automorphism.
class FnCu final : public Semigroup {
 public:
  FnCu(SemigroupPtr base, int size, std::vector<int> cyclic_factors = {},
       std::string label = "");
  static std::shared_ptr<const FnCu> make(SemigroupPtr base, int size,
                                          std::vector<int> cyclic_factors = {},
                                          std::string label = "");

  const SemigroupPtr& base() const { return base_; }
  int size() const { return size_; }
  bool has_translation() const { return !factors_.empty(); }
  const std::vector<int>& cyclic_factors() const { return factors_; }

  Elem make_fn(std::vector<Elem> values) const;
  const std::vector<Elem>& values(const Elem& x) const { return x.as<std::vector<Elem>>(); }

  // (tau . h)(eta) = h(tau + eta); tau indexes the abelian K lexicographically.
  Elem translate(int tau, const Elem& x) const;

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;
  std::optional<Atoms> atoms() const override;

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
  int size_;
  std::vector<int> factors_;

  int translate_index(int tau, int eta) const;
};

using FnCuPtr = std::shared_ptr<const FnCu>;

}  // namespace cucalc
