#include "cucalc/group.hpp"

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <string>

#include "doctest.h"

using namespace cucalc;

namespace {

// Writes `content` to a fresh file under the system temp directory.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/cucalc_test_" + std::to_string(counter++) + "_" + std::to_string(::getpid());
    std::ofstream os(path, std::ios::binary);
    os << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cyclic and product groups") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4->order() == 4);
  CHECK(z4->abelian());
  CHECK(z4->exponent() == 4);
  CHECK(z4->num_classes() == 4);
  REQUIRE(z4->cyclic_factors().has_value());
  CHECK(*z4->cyclic_factors() == std::vector<int>{4});

  auto v4 = FiniteGroup::product({2, 2});
  CHECK(v4->order() == 4);
  CHECK(v4->exponent() == 2);
  CHECK(*v4->cyclic_factors() == std::vector<int>{2, 2});

  auto z6 = FiniteGroup::product({2, 3});
  CHECK(z6->abelian());
  CHECK(z6->exponent() == 6);

  for (const auto& g : {z4, v4, z6})
    for (int a = 0; a < g->order(); ++a)
      CHECK(g->mul(a, g->inverse(a)) == g->identity());

  CHECK_THROWS_AS(FiniteGroup::cyclic(0), DomainError);
  CHECK_THROWS_AS(FiniteGroup::product({}), DomainError);
}

TEST_CASE("bundled nonabelian groups and their class structure") {
  auto s3 = FiniteGroup::symmetric3();
  CHECK(s3->order() == 6);
  CHECK(!s3->abelian());
  CHECK(s3->exponent() == 6);
  CHECK(s3->num_classes() == 3);
  CHECK(s3->class_sizes() == std::vector<int>{1, 3, 2});  // least-member order
  CHECK(s3->class_of(s3->identity()) == 0);

  auto d4 = FiniteGroup::dihedral4();
  CHECK(d4->order() == 8);
  CHECK(d4->exponent() == 4);
  CHECK(d4->class_sizes() == std::vector<int>{1, 2, 1, 2, 2});

  auto q8 = FiniteGroup::quaternion8();
  CHECK(q8->order() == 8);
  CHECK(q8->exponent() == 4);
  CHECK(q8->class_sizes() == std::vector<int>{1, 1, 2, 2, 2});

  CHECK(CharTable::bundled("s3").irreps.size() == 3);
  CharTable::bundled("s3").validate(*s3);
  CharTable::bundled("d4").validate(*d4);
  CharTable::bundled("q8").validate(*q8);
  CHECK_THROWS_AS(CharTable::bundled("a5"), DomainError);
}

TEST_CASE("synthesized abelian tables validate") {
  for (auto g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::product({2, 4})}) {
    CharTable t = CharTable::synthesize_abelian(*g);
    CHECK(static_cast<int>(t.irreps.size()) == g->order());
    for (const auto& ir : t.irreps) CHECK(ir.dim == 1);
    t.validate(*g);
  }
}

TEST_CASE("validate rejects a tampered table") {
  auto g = FiniteGroup::cyclic(3);
  CharTable t = CharTable::synthesize_abelian(*g);
  t.irreps[1].dim = 2;
  CHECK_THROWS_AS(t.validate(*g), DomainError);
}

TEST_CASE("multiplication tables load from files") {
  TempFile z3(
      "3\n"
      "0 1 2\n"
      "1 2 0\n"
      "2 0 1\n");
  auto g = FiniteGroup::load_table(z3.path);
  CHECK(g->order() == 3);
  CHECK(g->abelian());
  CHECK(g->exponent() == 3);
  CHECK(g->num_classes() == 3);
  // Loaded tables carry no declared cyclic factors even when the group is cyclic.
  CHECK(!g->cyclic_factors().has_value());

  TempFile not_a_group(
      "2\n"
      "0 0\n"
      "0 0\n");
  CHECK_THROWS_AS(FiniteGroup::load_table(not_a_group.path), DomainError);

  TempFile truncated("3\n0 1 2\n");
  CHECK_THROWS_AS(FiniteGroup::load_table(truncated.path), ParseError);
  CHECK_THROWS_AS(FiniteGroup::load_table("/nonexistent/table"), ParseError);
}

TEST_CASE("character tables load from files") {
  TempFile z3(
      "3\n"
      "0 1 2\n"
      "1 2 0\n"
      "2 0 1\n");
  auto g = FiniteGroup::load_table(z3.path);

  // Coefficient vectors list powers of zeta_3 per class, classes in
  // least-member order (here each element is its own class: 0, 1, 2).
  TempFile chars(
      "exponent 3\n"
      "classes 1 1 1\n"
      "1 [1,0,0] [1,0,0] [1,0,0]\n"
      "1 [1,0,0] [0,1,0] [0,0,1]\n"
      "1 [1,0,0] [0,0,1] [0,1,0]\n");
  CharTable t = CharTable::load(chars.path);
  CHECK(t.exponent == 3);
  CHECK(t.irreps.size() == 3);
  CHECK(t.trivial_index == 0);
  t.validate(*g);

  TempFile junk("classes 1 1 1\n1 [1] [1] [1]\n");
  CHECK_THROWS_AS(CharTable::load(junk.path), ParseError);
  CHECK_THROWS_AS(CharTable::load("/nonexistent/chars"), ParseError);
}
