#include "cucalc/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cucalc/parse_util.hpp"

namespace cucalc {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

int element_order(const std::vector<std::vector<int>>& table, int identity, int g) {
  int x = g;
  int ord = 1;
  while (x != identity) {
    x = table[x][g];
    ++ord;
    if (ord > static_cast<int>(table.size())) throw DomainError("multiplication table is not a group");
  }
  return ord;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  validate_and_index();
}

void FiniteGroup::validate_and_index() {
  int n = static_cast<int>(table_.size());
  if (n == 0) throw DomainError("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("multiplication table entry out of range");
  }
  // Latin square check (cancellation property).
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table_[i][j]] || seen_col[table_[j][i]])
        throw DomainError("multiplication table is not cancellative");
      seen_row[table_[i][j]] = true;
      seen_col[table_[j][i]] = true;
    }
  }
  // Identity.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw DomainError("multiplication table has no identity");
  // Associativity (n <= 64 in practice; cubic check is fine).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw DomainError("multiplication table is not associative");
  // Inverses.
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw DomainError("group element without inverse");
  }
  // Exponent, commutativity.
  exponent_ = 1;
  for (int g = 0; g < n; ++g)
    exponent_ = static_cast<int>(std::lcm(exponent_, element_order(table_, identity_, g)));
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = 0; b < n && abelian_; ++b)
      if (table_[a][b] != table_[b][a]) abelian_ = false;
  // Conjugacy classes, ordered by least member.
  class_of_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    int id = static_cast<int>(classes_.size());
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      int conj = table_[table_[h][g]][inverse_[h]];
      if (class_of_[conj] < 0) {
        class_of_[conj] = id;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

std::vector<int> FiniteGroup::class_sizes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::shared_ptr<const FiniteGroup> with_factors(std::shared_ptr<FiniteGroup> g,
                                                std::vector<int> factors) {
  g->cyclic_factors_ = std::move(factors);
  return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return with_factors(std::make_shared<FiniteGroup>("cyclic:" + std::to_string(n), std::move(t)),
                      {n});
}

GroupPtr FiniteGroup::product(const std::vector<int>& factors) {
  if (factors.empty()) throw DomainError("product group needs at least one factor");
  long long n = 1;
  for (int f : factors) {
    if (f < 1) throw DomainError("product factors must be positive");
    n *= f;
    if (n > 4096) throw DomainError("product group too large");
  }
  int order = static_cast<int>(n);
  int k = static_cast<int>(factors.size());
  auto decode = [&](int idx) {
    std::vector<int> tuple(k);
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = idx % factors[i];
      idx /= factors[i];
    }
    return tuple;
  };
  auto encode = [&](const std::vector<int>& tuple) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i] + tuple[i];
    return idx;
  };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    auto ta = decode(a);
    for (int b = 0; b < order; ++b) {
      auto tb = decode(b);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ta[i] + tb[i]) % factors[i];
      t[a][b] = encode(s);
    }
  }
  std::string name = "product:";
  for (size_t i = 0; i < factors.size(); ++i)
    name += (i ? "," : "") + std::to_string(factors[i]);
  return with_factors(std::make_shared<FiniteGroup>(name, std::move(t)), factors);
}

GroupPtr FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in the fixed order:
  // 0:id 1:(01) 2:(02) 3:(12) 4:(012) 5:(021), composing left-then-right as
  // (p*q)(x) = p(q(x)).
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(comp);
    }
  return std::make_shared<FiniteGroup>("s3", std::move(t));
}

GroupPtr FiniteGroup::dihedral4() {
  // r^a s^b with a in 0..3, b in 0..1, index a + 4b; s r = r^-1 s.
  auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          // (r^a s^b)(r^c s^d) = r^(a + c*(-1)^b) s^(b+d)
          int e = b == 0 ? a + c : a - c;
          t[idx(a, b)][idx(c, d)] = idx(e, b + d);
        }
  return std::make_shared<FiniteGroup>("d4", std::move(t));
}

GroupPtr FiniteGroup::quaternion8() {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k.
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  // Quaternion unit products: table over units {1,i,j,k} with signs.
  const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      t[a][b] = enc(unit_mul[ua][ub], sa * sb * sign_mul[ua][ub]);
    }
  return std::make_shared<FiniteGroup>("q8", std::move(t));
}

GroupPtr FiniteGroup::load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group table '" + path + "'");
  int n;
  if (!(in >> n) || n < 1 || n > 4096) throw ParseError("bad group order in '" + path + "'");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> t[i][j])) throw ParseError("truncated group table in '" + path + "'");
  return std::make_shared<FiniteGroup>("table:" + path, std::move(t));
}

std::complex<double> CharTable::value(int irrep, int cls) const {
  const auto& c = irreps[irrep].coeffs[cls];
  std::complex<double> v(0.0, 0.0);
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    double ang = kTau * static_cast<double>(j) / static_cast<double>(exponent);
    v += static_cast<double>(c[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return v;
}

void CharTable::validate(const FiniteGroup& g, double tol) const {
  int k = g.num_classes();
  if (static_cast<int>(irreps.size()) != k)
    throw DomainError("character table must have one irrep per conjugacy class");
  if (class_sizes != g.class_sizes())
    throw DomainError("character table class sizes disagree with the group's classes");
  if (exponent % g.exponent() != 0 && g.exponent() % exponent != 0 && exponent != g.exponent())
    throw DomainError("character table exponent incompatible with the group");
  long long dim2 = 0;
  for (const auto& ir : irreps) {
    if (ir.dim < 1) throw DomainError("irrep dimension must be positive");
    if (static_cast<int>(ir.coeffs.size()) != k)
      throw DomainError("irrep must carry one value per class");
    for (const auto& c : ir.coeffs)
      if (static_cast<int>(c.size()) != exponent)
        throw DomainError("coefficient vectors must have length = exponent");
    dim2 += static_cast<long long>(ir.dim) * ir.dim;
  }
  if (dim2 != g.order())
    throw DomainError("squared dimensions must sum to the group order");
  // chi(identity) = dim; identity lies in the first class (least member 0).
  for (size_t r = 0; r < irreps.size(); ++r) {
    std::complex<double> v = value(static_cast<int>(r), g.class_of(g.identity()));
    if (std::abs(v - std::complex<double>(irreps[r].dim, 0)) > tol)
      throw DomainError("character at the identity must equal the dimension");
  }
  // Row orthogonality: (1/|G|) sum_c size_c chi_r(c) conj(chi_s(c)) = delta_rs.
  for (size_t r = 0; r < irreps.size(); ++r)
    for (size_t s = 0; s < irreps.size(); ++s) {
      std::complex<double> acc(0, 0);
      for (int c = 0; c < k; ++c)
        acc += static_cast<double>(class_sizes[c]) * value(static_cast<int>(r), c) *
               std::conj(value(static_cast<int>(s), c));
      acc /= static_cast<double>(g.order());
      double want = r == s ? 1.0 : 0.0;
      if (std::abs(acc - std::complex<double>(want, 0)) > tol)
        throw DomainError("character rows are not orthonormal");
    }
}

CharTable CharTable::synthesize_abelian(const FiniteGroup& g) {
  if (!g.cyclic_factors())
    throw DomainError("symbolic character synthesis needs explicit cyclic factors");
  const std::vector<int>& f = *g.cyclic_factors();
  int n = g.order();
  int k = static_cast<int>(f.size());
  int e = g.exponent();
  auto decode = [&](int idx) {
    std::vector<int> tuple(k);
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = idx % f[i];
      idx /= f[i];
    }
    return tuple;
  };
  CharTable t;
  t.exponent = e;
  t.class_sizes.assign(n, 1);
  t.irreps.resize(n);
  for (int a = 0; a < n; ++a) {
    auto ta = decode(a);
    t.irreps[a].dim = 1;
    std::string label = "chi";
    for (int i = 0; i < k; ++i) label += (i ? "," : ":") + std::to_string(ta[i]);
    t.irreps[a].label = label;
    t.irreps[a].coeffs.resize(n);
    for (int gidx = 0; gidx < n; ++gidx) {
      auto tg = decode(gidx);
      long long phase = 0;
      for (int i = 0; i < k; ++i)
        phase = (phase + static_cast<long long>(ta[i]) * tg[i] * (e / f[i])) % e;
      std::vector<long long> c(e, 0);
      c[static_cast<size_t>(phase)] = 1;
      t.irreps[a].coeffs[gidx] = std::move(c);
    }
  }
  t.trivial_index = 0;
  return t;
}

namespace {

CharTable integer_table(int exponent, std::vector<int> sizes,
                        std::vector<std::pair<std::string, std::vector<long long>>> rows,
                        std::vector<int> dims) {
  CharTable t;
  t.exponent = exponent;
  t.class_sizes = std::move(sizes);
  for (size_t r = 0; r < rows.size(); ++r) {
    CharTable::Irrep ir;
    ir.label = rows[r].first;
    ir.dim = dims[r];
    for (long long v : rows[r].second) {
      std::vector<long long> c(exponent, 0);
      c[0] = v;
      ir.coeffs.push_back(std::move(c));
    }
    t.irreps.push_back(std::move(ir));
  }
  t.trivial_index = 0;
  return t;
}

}  // namespace

CharTable CharTable::bundled(const std::string& group_name) {
  // Class order matches FiniteGroup's least-member ordering.
  if (group_name == "s3") {
    // Classes: {id}, {transpositions}, {3-cycles}.
    return integer_table(6, {1, 3, 2},
                         {{"triv", {1, 1, 1}}, {"sgn", {1, -1, 1}}, {"std", {2, 0, -1}}},
                         {1, 1, 2});
  }
  if (group_name == "d4") {
    // Classes by least member: {e}, {r,r^3}, {r^2}, {s,r^2 s}, {rs,r^3 s}.
    return integer_table(4, {1, 2, 1, 2, 2},
                         {{"triv", {1, 1, 1, 1, 1}},
                          {"chi:s", {1, 1, 1, -1, -1}},
                          {"chi:r", {1, -1, 1, 1, -1}},
                          {"chi:rs", {1, -1, 1, -1, 1}},
                          {"two", {2, 0, -2, 0, 0}}},
                         {1, 1, 1, 1, 2});
  }
  if (group_name == "q8") {
    // Classes by least member: {1}, {-1}, {+-i}, {+-j}, {+-k}.
    return integer_table(4, {1, 1, 2, 2, 2},
                         {{"triv", {1, 1, 1, 1, 1}},
                          {"chi:i", {1, 1, 1, -1, -1}},
                          {"chi:j", {1, 1, -1, 1, -1}},
                          {"chi:k", {1, 1, -1, -1, 1}},
                          {"two", {2, -2, 0, 0, 0}}},
                         {1, 1, 1, 1, 2});
  }
  throw DomainError("no bundled character table for '" + group_name + "'");
}

CharTable CharTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character table '" + path + "'");
  CharTable t;
  std::string line;
  int lineno = 0;
  bool have_exp = false, have_classes = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = parse_util::trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ls{std::string(s)};
    std::string head;
    ls >> head;
    if (head == "exponent") {
      if (!(ls >> t.exponent) || t.exponent < 1)
        throw ParseError("bad exponent line in '" + path + "'");
      have_exp = true;
      continue;
    }
    if (head == "classes") {
      int v;
      while (ls >> v) t.class_sizes.push_back(v);
      have_classes = true;
      continue;
    }
    if (!have_exp || !have_classes)
      throw ParseError("character table needs 'exponent' and 'classes' before irreps");
    // Irrep line: <dim> [c0,c1,...] [..] ...
    Irrep ir;
    ir.dim = parse_util::parse_ll(head) > 0 ? static_cast<int>(parse_util::parse_ll(head)) : 0;
    if (ir.dim < 1) throw ParseError("irrep dimension must be positive (line " +
                                     std::to_string(lineno) + ")");
    ir.label = "irrep" + std::to_string(t.irreps.size());
    std::string rest;
    std::getline(ls, rest);
    std::string_view rs = parse_util::trim(rest);
    while (!rs.empty()) {
      if (rs[0] != '[') throw ParseError("expected '[' in character value (line " +
                                         std::to_string(lineno) + ")");
      size_t close = rs.find(']');
      if (close == std::string_view::npos)
        throw ParseError("unterminated character value (line " + std::to_string(lineno) + ")");
      std::string_view body = rs.substr(1, close - 1);
      std::vector<long long> coeffs;
      for (auto part : parse_util::split_top(body, ','))
        if (!parse_util::trim(part).empty()) coeffs.push_back(parse_util::parse_ll(part));
      coeffs.resize(static_cast<size_t>(t.exponent), 0);
      ir.coeffs.push_back(std::move(coeffs));
      rs = parse_util::trim(rs.substr(close + 1));
    }
    if (ir.coeffs.size() != t.class_sizes.size())
      throw ParseError("irrep line must carry one value per class (line " +
                       std::to_string(lineno) + ")");
    t.irreps.push_back(std::move(ir));
  }
  // Locate the trivial irrep: dim 1 with all values equal to 1.
  for (size_t r = 0; r < t.irreps.size(); ++r) {
    if (t.irreps[r].dim != 1) continue;
    bool triv = true;
    for (size_t c = 0; c < t.class_sizes.size() && triv; ++c) {
      const auto& v = t.irreps[r].coeffs[c];
      for (size_t j = 0; j < v.size() && triv; ++j)
        if (v[j] != (j == 0 ? 1 : 0)) triv = false;
    }
    if (triv) {
      t.trivial_index = static_cast<int>(r);
      break;
    }
  }
  if (t.trivial_index < 0)
    throw DomainError("character table has no trivial irrep row");
  return t;
}

}  // namespace cucalc
