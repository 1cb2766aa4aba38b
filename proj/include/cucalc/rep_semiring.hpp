#pragma once

#include "cucalc/group.hpp"
#include "cucalc/semigroup.hpp"

namespace cucalc {

// Multiplicity vectors over the irreducibles of a finite group, with values
// in the extended naturals. Addition is componentwise (direct sum), the
// product is the tensor/fusion product, and the order is componentwise.
// A vector is way-below another iff all its entries are finite and it is
// below; canonical approximants truncate infinite entries at k.
class RepSemiring final : public Semigroup {
 public:
  RepSemiring(GroupPtr group, CharTable chars);

  // Character table chosen automatically: synthesized for groups with cyclic
  // factors, bundled for s3/d4/q8.
  static std::shared_ptr<const RepSemiring> make(const GroupPtr& group);
  static std::shared_ptr<const RepSemiring> make(const GroupPtr& group, CharTable chars);

  const FiniteGroup& group() const { return *group_; }
  const CharTable& chars() const { return chars_; }
  int num_irreps() const { return static_cast<int>(chars_.irreps.size()); }
  int irrep_dim(int i) const { return chars_.irreps[i].dim; }
  int trivial_index() const { return chars_.trivial_index; }

  Elem make_vec(std::vector<ExtNat> m) const;
  const std::vector<ExtNat>& vec(const Elem& x) const { return x.as<std::vector<ExtNat>>(); }

  Elem one() const;          // indicator of the trivial irrep
  Elem irrep(int i) const;   // indicator of irrep i
  Elem regular_rep() const;  // multiplicity d_pi at every irrep

  // Fusion product of elements or single irreps.
  Elem tensor(const Elem& x, const Elem& y) const;
  ExtNat fusion_coefficient(int sigma, int tau, int pi) const;

  // Weighted dimension sum(m_pi * d_pi) in the extended naturals.
  ExtNat dimension(const Elem& x) const;

  // Numeric fusion tensor from characters, with the largest rounding residue
  // observed while building it.
  const std::vector<std::vector<std::vector<long long>>>& fusion_numeric() const;
  double fusion_residue() const;
  // Group-law fusion for abelian groups with cyclic factors: N[s][t][p] =
  // 1 iff p = s + t in the dual group. Throws for nonabelian groups.
  std::vector<std::vector<std::vector<long long>>> fusion_symbolic() const;

  std::optional<Elem> non_compact_witness() const override;
  std::optional<Atoms> atoms() const override {
    return Atoms{false, ExtNat(num_irreps())};
  }

  Elem sample(Rng& rng) const override;
  std::string format(const Elem& x) const override;
  Elem parse(std::string_view text) const override;

  std::shared_ptr<const RepSemiring> self_rep() const {
    return std::static_pointer_cast<const RepSemiring>(shared_from_this());
  }

 protected:
  Elem zero_impl() const override;
  Elem add_impl(const Elem& x, const Elem& y) const override;
  bool leq_impl(const Elem& x, const Elem& y) const override;
  bool wb_impl(const Elem& x, const Elem& y) const override;
  Elem approximant_impl(const Elem& x, int k) const override;
  Elem inf_scale_impl(const Elem& x) const override;

 private:
  GroupPtr group_;
  CharTable chars_;
  mutable std::vector<std::vector<std::vector<long long>>> fusion_;
  mutable double residue_ = 0.0;
  mutable bool fusion_built_ = false;

  void build_fusion() const;
};

using RepSemiringPtr = std::shared_ptr<const RepSemiring>;

// Resolve "cyclic:<n>", "product:<a>,<b>,...", "s3", "d4", "q8",
// "table:<path>" (requires chartable) into a group; `char_table_path`
// overrides the automatic character table when present.
RepSemiringPtr resolve_rep_semiring(const std::string& group_spec,
                                    const std::string& group_table_path = "",
                                    const std::string& char_table_path = "");

}  // namespace cucalc
