#include "cucalc/rep_semiring.hpp"

#include <cmath>

#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace pu = parse_util;

RepSemiring::RepSemiring(GroupPtr group, CharTable chars)
    : Semigroup("cug:" + group->name()), group_(std::move(group)), chars_(std::move(chars)) {
  chars_.validate(*group_);
}

std::shared_ptr<const RepSemiring> RepSemiring::make(const GroupPtr& group) {
  if (group->cyclic_factors()) return make(group, CharTable::synthesize_abelian(*group));
  return make(group, CharTable::bundled(group->name()));
}

std::shared_ptr<const RepSemiring> RepSemiring::make(const GroupPtr& group, CharTable chars) {
  return std::make_shared<RepSemiring>(group, std::move(chars));
}

Elem RepSemiring::make_vec(std::vector<ExtNat> m) const {
  if (static_cast<int>(m.size()) != num_irreps())
    throw DomainError("multiplicity vector must have one entry per irrep");
  return Elem(self(), Payload(std::move(m)));
}

Elem RepSemiring::one() const {
  std::vector<ExtNat> m(num_irreps(), ExtNat(0));
  m[static_cast<size_t>(trivial_index())] = ExtNat(1);
  return make_vec(std::move(m));
}

Elem RepSemiring::irrep(int i) const {
  if (i < 0 || i >= num_irreps()) throw DomainError("irrep index out of range");
  std::vector<ExtNat> m(num_irreps(), ExtNat(0));
  m[static_cast<size_t>(i)] = ExtNat(1);
  return make_vec(std::move(m));
}

Elem RepSemiring::regular_rep() const {
  std::vector<ExtNat> m;
  m.reserve(num_irreps());
  for (int i = 0; i < num_irreps(); ++i) m.emplace_back(irrep_dim(i));
  return make_vec(std::move(m));
}

void RepSemiring::build_fusion() const {
  if (fusion_built_) return;
  int k = num_irreps();
  int n = group_->order();
  fusion_.assign(k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  residue_ = 0.0;
  for (int s = 0; s < k; ++s)
    for (int t = s; t < k; ++t)
      for (int p = 0; p < k; ++p) {
        std::complex<double> acc(0, 0);
        for (int c = 0; c < group_->num_classes(); ++c)
          acc += static_cast<double>(chars_.class_sizes[c]) * chars_.value(s, c) *
                 chars_.value(t, c) * std::conj(chars_.value(p, c));
        acc /= static_cast<double>(n);
        double re = acc.real();
        long long r = std::llround(re);
        double res = std::max(std::abs(re - static_cast<double>(r)), std::abs(acc.imag()));
        residue_ = std::max(residue_, res);
        if (res > 1e-6)
          throw DomainError("fusion coefficient is not integral within tolerance for " + name());
        if (r < 0)
          throw DomainError("fusion coefficient is negative for " + name());
        fusion_[s][t][p] = r;
        fusion_[t][s][p] = r;
      }
  fusion_built_ = true;
}

const std::vector<std::vector<std::vector<long long>>>& RepSemiring::fusion_numeric() const {
  build_fusion();
  return fusion_;
}

double RepSemiring::fusion_residue() const {
  build_fusion();
  return residue_;
}

std::vector<std::vector<std::vector<long long>>> RepSemiring::fusion_symbolic() const {
  if (!group_->cyclic_factors())
    throw DomainError("symbolic fusion requires a group with explicit cyclic factors");
  const std::vector<int>& f = *group_->cyclic_factors();
  int k = num_irreps();
  int nf = static_cast<int>(f.size());
  auto decode = [&](int idx) {
    std::vector<int> tuple(nf);
    for (int i = nf - 1; i >= 0; --i) {
      tuple[i] = idx % f[i];
      idx /= f[i];
    }
    return tuple;
  };
  auto encode = [&](const std::vector<int>& tuple) {
    int idx = 0;
    for (int i = 0; i < nf; ++i) idx = idx * f[i] + tuple[i];
    return idx;
  };
  std::vector<std::vector<std::vector<long long>>> out(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      auto ts = decode(s);
      auto tt = decode(t);
      std::vector<int> sum(nf);
      for (int i = 0; i < nf; ++i) sum[i] = (ts[i] + tt[i]) % f[i];
      out[s][t][encode(sum)] = 1;
    }
  return out;
}

ExtNat RepSemiring::fusion_coefficient(int sigma, int tau, int pi) const {
  build_fusion();
  return ExtNat(fusion_[sigma][tau][pi]);
}

Elem RepSemiring::tensor(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  build_fusion();
  int k = num_irreps();
  const auto& a = vec(x);
  const auto& b = vec(y);
  std::vector<ExtNat> out(k, ExtNat(0));
  for (int s = 0; s < k; ++s) {
    if (a[s].is_zero()) continue;
    for (int t = 0; t < k; ++t) {
      if (b[t].is_zero()) continue;
      for (int p = 0; p < k; ++p) {
        if (fusion_[s][t][p] == 0) continue;
        out[p] = out[p] + a[s] * b[t] * ExtNat(fusion_[s][t][p]);
      }
    }
  }
  return make_vec(std::move(out));
}

ExtNat RepSemiring::dimension(const Elem& x) const {
  check_owner(x);
  const auto& a = vec(x);
  ExtNat d(0);
  for (int i = 0; i < num_irreps(); ++i) d = d + a[i] * ExtNat(irrep_dim(i));
  return d;
}

Elem RepSemiring::zero_impl() const {
  return Elem(self(), Payload(std::vector<ExtNat>(num_irreps(), ExtNat(0))));
}

Elem RepSemiring::add_impl(const Elem& x, const Elem& y) const {
  const auto& a = vec(x);
  const auto& b = vec(y);
  std::vector<ExtNat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Elem(self(), Payload(std::move(out)));
}

bool RepSemiring::leq_impl(const Elem& x, const Elem& y) const {
  const auto& a = vec(x);
  const auto& b = vec(y);
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool RepSemiring::wb_impl(const Elem& x, const Elem& y) const {
  const auto& a = vec(x);
  const auto& b = vec(y);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].way_below(b[i])) return false;
  return true;
}

Elem RepSemiring::approximant_impl(const Elem& x, int k) const {
  const auto& a = vec(x);
  std::vector<ExtNat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].approximant(k);
  return Elem(self(), Payload(std::move(out)));
}

Elem RepSemiring::inf_scale_impl(const Elem& x) const {
  const auto& a = vec(x);
  std::vector<ExtNat> out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = a[i].is_zero() ? ExtNat(0) : ExtNat::infinity();
  return Elem(self(), Payload(std::move(out)));
}

std::optional<Elem> RepSemiring::non_compact_witness() const {
  std::vector<ExtNat> m(num_irreps(), ExtNat(0));
  m[0] = ExtNat::infinity();
  return make_vec(std::move(m));
}

Elem RepSemiring::sample(Rng& rng) const {
  std::vector<ExtNat> m(num_irreps());
  for (auto& v : m) {
    if (rng.chance(1, 6))
      v = ExtNat::infinity();
    else
      v = ExtNat(rng.range(0, 3));
  }
  return make_vec(std::move(m));
}

std::string RepSemiring::format(const Elem& x) const {
  const auto& a = vec(x);
  std::string out = "rep:";
  for (size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + a[i].str();
  return out;
}

Elem RepSemiring::parse(std::string_view text) const {
  std::string_view s = pu::trim(text);
  if (!pu::consume_prefix(s, "rep:")) throw ParseError("expected rep:<m0>,<m1>,...");
  std::vector<ExtNat> m;
  for (auto part : pu::split_top(s, ',')) m.push_back(pu::parse_extnat(part));
  if (static_cast<int>(m.size()) != num_irreps())
    throw ParseError("expected " + std::to_string(num_irreps()) + " multiplicities for " + name());
  return make_vec(std::move(m));
}

RepSemiringPtr resolve_rep_semiring(const std::string& group_spec,
                                    const std::string& group_table_path,
                                    const std::string& char_table_path) {
  GroupPtr g;
  if (group_spec == "s3")
    g = FiniteGroup::symmetric3();
  else if (group_spec == "d4")
    g = FiniteGroup::dihedral4();
  else if (group_spec == "q8")
    g = FiniteGroup::quaternion8();
  else if (group_spec.rfind("cyclic:", 0) == 0)
    g = FiniteGroup::cyclic(static_cast<int>(pu::parse_ll(group_spec.substr(7))));
  else if (group_spec.rfind("product:", 0) == 0) {
    std::vector<int> fs;
    for (auto part : pu::split_top(std::string_view(group_spec).substr(8), ','))
      fs.push_back(static_cast<int>(pu::parse_ll(part)));
    g = FiniteGroup::product(fs);
  } else if (group_spec == "table" || group_spec.rfind("table:", 0) == 0) {
    std::string path = group_spec == "table" ? group_table_path : group_spec.substr(6);
    if (!group_table_path.empty()) path = group_table_path;
    if (path.empty()) throw ParseError("group 'table' requires a table path");
    g = FiniteGroup::load_table(path);
  } else {
    throw ParseError("unknown group spec '" + group_spec + "'");
  }
  if (!char_table_path.empty()) return RepSemiring::make(g, CharTable::load(char_table_path));
  return RepSemiring::make(g);
}

}  // namespace cucalc
