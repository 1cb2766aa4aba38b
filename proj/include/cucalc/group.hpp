#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/errors.hpp"

namespace cucalc {

// Finite group given by its multiplication table. Conjugacy classes are
// computed from the table and ordered by least member index; character tables
// (bundled, synthesized, or loaded) must list their columns in that order.
class FiniteGroup {
 public:
  // table[i][j] = index of the product of elements i and j.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int exponent() const { return exponent_; }
  bool abelian() const { return abelian_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int g) const { return class_of_[g]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  std::vector<int> class_sizes() const;

  // Present when the group was built as a product of cyclic factors; element
  // index i decodes to the tuple of residues in row-major (lexicographic)
  // order. Enables the symbolic dual-group path.
  const std::optional<std::vector<int>>& cyclic_factors() const { return cyclic_factors_; }

  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> product(const std::vector<int>& factors);
  static std::shared_ptr<const FiniteGroup> symmetric3();
  static std::shared_ptr<const FiniteGroup> dihedral4();
  static std::shared_ptr<const FiniteGroup> quaternion8();
  // File format: first line n, then n rows of n indices in [0, n).
  static std::shared_ptr<const FiniteGroup> load_table(const std::string& path);

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::optional<std::vector<int>> cyclic_factors_;

  void validate_and_index();
  friend std::shared_ptr<const FiniteGroup> with_factors(std::shared_ptr<FiniteGroup>,
                                                         std::vector<int>);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Irreducible characters. Values are exact: per class, a vector of e integer
// coefficients c_j representing sum_j c_j * zeta_e^j with zeta_e = e^(2*pi*i/e).
struct CharTable {
  struct Irrep {
    std::string label;
    int dim;
    std::vector<std::vector<long long>> coeffs;  // one coefficient vector per class
  };

  int exponent = 1;
  std::vector<int> class_sizes;
  std::vector<Irrep> irreps;
  int trivial_index = -1;

  std::complex<double> value(int irrep, int cls) const;

  // Checks sum of squared dimensions, row orthogonality (within tol), and
  // locates the trivial irrep. Throws DomainError on failure.
  void validate(const FiniteGroup& g, double tol = 1e-6) const;

  static CharTable synthesize_abelian(const FiniteGroup& g);
  static CharTable bundled(const std::string& group_name);  // s3, d4, q8
  // File format: `exponent <e>`, `classes <s1> ... <sk>`, then one line per
  // irrep: `<dim> [c0,c1,...] [..] ...` with one bracket group per class.
  static CharTable load(const std::string& path);
};

}  // namespace cucalc
