#include "cucalc/seq_limit.hpp"

#include "cucalc/errors.hpp"

namespace cucalc {

SeqLimitCu::SeqLimitCu(std::vector<MorphismPtr> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw PreconditionError("sequential limit: need at least one connecting map");
  for (const MorphismPtr& m : maps_)
    if (!m) throw PreconditionError("sequential limit: null connecting map");
  for (std::size_t i = 0; i + 1 < maps_.size(); ++i)
    if (maps_[i]->target() != maps_[i + 1]->source())
      throw PreconditionError("sequential limit: connecting maps do not compose");
  set_name("limit:" + maps_.back()->target()->name());
}

std::shared_ptr<const SeqLimitCu> SeqLimitCu::make(std::vector<MorphismPtr> maps) {
  return std::make_shared<SeqLimitCu>(std::move(maps));
}

const SemigroupPtr& SeqLimitCu::stage(std::size_t i) const {
  if (i >= stage_count()) throw PreconditionError("sequential limit: stage index out of range");
  return i < maps_.size() ? maps_[i]->source() : maps_.back()->target();
}

Elem SeqLimitCu::wrap(Elem top_elem) const {
  return Elem(self(), Payload(std::vector<Elem>{std::move(top_elem)}));
}

Elem SeqLimitCu::from_stage(std::size_t i, const Elem& x) const {
  stage(i)->check_owner(x);
  Elem cur = x;
  for (std::size_t j = i; j < maps_.size(); ++j) cur = (*maps_[j])(cur);
  return wrap(std::move(cur));
}

Elem SeqLimitCu::zero_impl() const { return wrap(top()->zero()); }

Elem SeqLimitCu::add_impl(const Elem& x, const Elem& y) const {
  return wrap(top()->add(top_value(x), top_value(y)));
}

bool SeqLimitCu::leq_impl(const Elem& x, const Elem& y) const {
  return top()->leq(top_value(x), top_value(y));
}

bool SeqLimitCu::wb_impl(const Elem& x, const Elem& y) const {
  return top()->way_below(top_value(x), top_value(y));
}

Elem SeqLimitCu::approximant_impl(const Elem& x, int k) const {
  return wrap(top()->approximant(top_value(x), k));
}

Elem SeqLimitCu::inf_scale_impl(const Elem& x) const {
  return wrap(top()->nat_scale(ExtNat::infinity(), top_value(x)));
}

std::optional<Elem> SeqLimitCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  auto m = top()->meet(top_value(x), top_value(y));
  if (!m) return std::nullopt;
  return wrap(std::move(*m));
}

Chain SeqLimitCu::canonical_chain(const Elem& x) const {
  check_owner(x);
  Chain inner = top()->canonical_chain(top_value(x));
  auto lim = std::static_pointer_cast<const SeqLimitCu>(self());
  return Chain::registered([lim, inner](int k) { return lim->wrap(inner.term(k)); }, x);
}

std::optional<Elem> SeqLimitCu::non_compact_witness() const {
  auto w = top()->non_compact_witness();
  if (!w) return std::nullopt;
  return wrap(std::move(*w));
}

Elem SeqLimitCu::sample(Rng& rng) const {
  const std::size_t i = rng.below(stage_count());
  return from_stage(i, stage(i)->sample(rng));
}

std::string SeqLimitCu::format(const Elem& x) const {
  check_owner(x);
  return "lim:" + top()->format(top_value(x));
}

}  // namespace cucalc
