#include "cucalc/fn_product.hpp"

#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace pu = parse_util;

FnCu::FnCu(SemigroupPtr base, int size, std::vector<int> cyclic_factors, std::string label)
    : Semigroup(label.empty()
                    ? "fn:" + base->name() + ":" + std::to_string(size)
                    : std::move(label)),
      base_(std::move(base)),
      size_(size),
      factors_(std::move(cyclic_factors)) {
  if (size_ < 1) throw DomainError("function carrier needs a nonempty index set");
  if (!factors_.empty()) {
    long long prod = 1;
    for (int f : factors_) prod *= f;
    if (prod != size_)
      throw DomainError("cyclic factors must multiply to the index set size");
  }
}

std::shared_ptr<const FnCu> FnCu::make(SemigroupPtr base, int size,
                                       std::vector<int> cyclic_factors, std::string label) {
  return std::make_shared<FnCu>(std::move(base), size, std::move(cyclic_factors),
                                std::move(label));
}

Elem FnCu::make_fn(std::vector<Elem> vals) const {
  if (static_cast<int>(vals.size()) != size_)
    throw DomainError("expected " + std::to_string(size_) + " values for " + name());
  for (const Elem& v : vals)
    if (v.is_null() || v.owner() != base_.get())
      throw DomainError("function value does not belong to the base semigroup");
  return Elem(self(), Payload(std::move(vals)));
}

int FnCu::translate_index(int tau, int eta) const {
  // Decode both indices into tuples over the factors, add componentwise.
  int out = 0;
  int t = tau, e = eta;
  std::vector<int> digits(factors_.size());
  for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
    int f = factors_[static_cast<size_t>(i)];
    digits[static_cast<size_t>(i)] = (t % f + e % f) % f;
    t /= f;
    e /= f;
  }
  for (size_t i = 0; i < factors_.size(); ++i) out = out * factors_[i] + digits[i];
  return out;
}

Elem FnCu::translate(int tau, const Elem& x) const {
  check_owner(x);
  if (factors_.empty())
    throw DomainError("index set of " + name() + " has no group structure");
  if (tau < 0 || tau >= size_) throw DomainError("translation index out of range");
  const auto& v = values(x);
  std::vector<Elem> out(v.size());
  for (int eta = 0; eta < size_; ++eta)
    out[static_cast<size_t>(eta)] = v[static_cast<size_t>(translate_index(tau, eta))];
  return make_fn(std::move(out));
}

std::optional<Elem> FnCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  const auto& a = values(x);
  const auto& b = values(y);
  std::vector<Elem> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto m = base_->meet(a[i], b[i]);
    if (!m) return std::nullopt;
    out[i] = *m;
  }
  return make_fn(std::move(out));
}

std::optional<Elem> FnCu::non_compact_witness() const {
  auto w = base_->non_compact_witness();
  if (!w) return std::nullopt;
  std::vector<Elem> out(static_cast<size_t>(size_), base_->zero());
  out[0] = *w;
  return make_fn(std::move(out));
}

std::optional<Semigroup::Atoms> FnCu::atoms() const {
  auto a = base_->atoms();
  if (!a) return std::nullopt;
  if (a->none) return Atoms{true, ExtNat(0)};
  return Atoms{false, a->count * ExtNat(size_)};
}

Elem FnCu::zero_impl() const {
  return Elem(self(), Payload(std::vector<Elem>(static_cast<size_t>(size_), base_->zero())));
}

Elem FnCu::add_impl(const Elem& x, const Elem& y) const {
  const auto& a = values(x);
  const auto& b = values(y);
  std::vector<Elem> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = base_->add(a[i], b[i]);
  return Elem(self(), Payload(std::move(out)));
}

bool FnCu::leq_impl(const Elem& x, const Elem& y) const {
  const auto& a = values(x);
  const auto& b = values(y);
  for (size_t i = 0; i < a.size(); ++i)
    if (!base_->leq(a[i], b[i])) return false;
  return true;
}

bool FnCu::wb_impl(const Elem& x, const Elem& y) const {
  const auto& a = values(x);
  const auto& b = values(y);
  for (size_t i = 0; i < a.size(); ++i)
    if (!base_->way_below(a[i], b[i])) return false;
  return true;
}

Elem FnCu::approximant_impl(const Elem& x, int k) const {
  const auto& a = values(x);
  std::vector<Elem> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = base_->approximant(a[i], k);
  return Elem(self(), Payload(std::move(out)));
}

Elem FnCu::inf_scale_impl(const Elem& x) const {
  const auto& a = values(x);
  std::vector<Elem> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = base_->nat_scale(ExtNat::infinity(), a[i]);
  return Elem(self(), Payload(std::move(out)));
}

Elem FnCu::sample(Rng& rng) const {
  std::vector<Elem> out(static_cast<size_t>(size_));
  for (auto& v : out) v = base_->sample(rng);
  return make_fn(std::move(out));
}

std::string FnCu::format(const Elem& x) const {
  const auto& a = values(x);
  std::string out = "fn:";
  for (size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + base_->format(a[i]);
  return out;
}

Elem FnCu::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, "fn:")) throw ParseError("expected fn:<lit>,<lit>,...");
  std::vector<Elem> vals;
  for (auto part : pu::split_top(s, ',')) vals.push_back(base_->parse(pu::trim(part)));
  if (static_cast<int>(vals.size()) != size_)
    throw ParseError("expected " + std::to_string(size_) + " values for " + name());
  return make_fn(std::move(vals));
}

}  // namespace cucalc
