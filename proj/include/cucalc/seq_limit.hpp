#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

// Limit of a finite tower S_0 -> S_1 -> ... -> S_N with declared
// stabilization: comparisons at stage N are declared to decide the limit
// order (the connecting maps from stage N on are order embeddings). Elements
// are canonicalized by pushing to stage N, so two inserts from different
// stages are equal exactly when their pushforwards agree.
class SeqLimitCu final : public Semigroup {
 public:
  // maps[i]: stage i -> stage i+1; at least one map.
  explicit SeqLimitCu(std::vector<MorphismPtr> maps);
  static std::shared_ptr<const SeqLimitCu> make(std::vector<MorphismPtr> maps);

  std::size_t stage_count() const { return maps_.size() + 1; }
  const SemigroupPtr& stage(std::size_t i) const;
  const SemigroupPtr& top() const { return stage(stage_count() - 1); }

  // Insert x from stage i (pushes through the remaining maps).
  Elem from_stage(std::size_t i, const Elem& x) const;
  const Elem& top_value(const Elem& x) const { return x.as<std::vector<Elem>>()[0]; }

  std::optional<Elem> meet(const Elem& x, const Elem& y) const override;
  std::optional<Elem> non_compact_witness() const override;
  std::optional<Atoms> atoms() const override { return top()->atoms(); }
  Chain canonical_chain(const Elem& x) const override;

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;

 protected:
  Elem zero_impl() const override;
  Elem add_impl(const Elem& x, const Elem& y) const override;
  bool leq_impl(const Elem& x, const Elem& y) const override;
  bool wb_impl(const Elem& x, const Elem& y) const override;
  Elem approximant_impl(const Elem& x, int k) const override;
  Elem inf_scale_impl(const Elem& x) const override;

 private:
  std::vector<MorphismPtr> maps_;

  Elem wrap(Elem top_elem) const;
};

using SeqLimitPtr = std::shared_ptr<const SeqLimitCu>;

}  // namespace cucalc
