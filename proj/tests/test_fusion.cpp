#include <fstream>
#include <string>
#include <unistd.h>

#include "cucalc/rep_semiring.hpp"
#include "doctest.h"

using namespace cucalc;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/cucalc_fusion_" + std::to_string(counter++) + "_" + std::to_string(::getpid());
    std::ofstream os(path, std::ios::binary);
    os << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

ExtNat inf() { return ExtNat::infinity(); }

}  // namespace

TEST_CASE("abelian fusion: group law and character oracle agree exhaustively") {
  for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "product:2,2"}) {
    CAPTURE(spec);
    auto R = resolve_rep_semiring(spec);
    const auto symbolic = R->fusion_symbolic();
    const auto& numeric = R->fusion_numeric();
    CHECK(symbolic == numeric);
    CHECK(R->fusion_residue() <= 1e-9);
    // every product of characters is a character: coefficient rows sum to one
    const int n = R->num_irreps();
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        long long total = 0;
        for (int p = 0; p < n; ++p) total += numeric[s][t][p];
        CHECK(total == 1);
      }
  }
}

TEST_CASE("symmetric group on three letters: the classical fusion table") {
  auto R = resolve_rep_semiring("s3");
  REQUIRE(R->num_irreps() == 3);
  CHECK(R->trivial_index() == 0);
  CHECK(R->irrep_dim(0) == 1);
  CHECK(R->irrep_dim(1) == 1);
  CHECK(R->irrep_dim(2) == 2);
  CHECK(R->fusion_residue() <= 1e-9);
  CHECK_THROWS_AS(R->fusion_symbolic(), DomainError);  // group-law path is abelian-only

  const Elem triv = R->irrep(0), sgn = R->irrep(1), std2 = R->irrep(2);
  for (int i = 0; i < 3; ++i) {
    CHECK(R->equal(R->tensor(triv, R->irrep(i)), R->irrep(i)));
    CHECK(R->equal(R->tensor(R->irrep(i), triv), R->irrep(i)));
  }
  CHECK(R->equal(R->tensor(sgn, sgn), triv));
  CHECK(R->equal(R->tensor(sgn, std2), std2));
  CHECK(R->equal(R->tensor(std2, sgn), std2));
  CHECK(R->equal(R->tensor(std2, std2), R->make_vec({ExtNat(1), ExtNat(1), ExtNat(1)})));
  CHECK(R->equal(R->regular_rep(), R->make_vec({ExtNat(1), ExtNat(1), ExtNat(2)})));

  CHECK(R->fusion_coefficient(2, 2, 0) == ExtNat(1));
  CHECK(R->fusion_coefficient(2, 2, 1) == ExtNat(1));
  CHECK(R->fusion_coefficient(2, 2, 2) == ExtNat(1));
  CHECK(R->fusion_coefficient(1, 1, 1) == ExtNat(0));
}

TEST_CASE("tensor distributes over infinite multiplicities") {
  auto R = resolve_rep_semiring("cyclic:2");
  const Elem a = R->make_vec({inf(), ExtNat(0)});
  const Elem b = R->make_vec({ExtNat(0), ExtNat(1)});
  CHECK(R->equal(R->tensor(a, b), R->make_vec({ExtNat(0), inf()})));
  CHECK(R->equal(R->tensor(a, a), a));
  const Elem mixed = R->make_vec({ExtNat(1), inf()});
  CHECK(R->equal(R->tensor(mixed, R->one()), mixed));
  CHECK(R->dimension(mixed) == inf());
}

TEST_CASE("weighted dimension is additive and multiplicative") {
  auto R = resolve_rep_semiring("s3");
  const Elem x = R->make_vec({ExtNat(1), ExtNat(0), ExtNat(2)});
  const Elem y = R->make_vec({ExtNat(0), ExtNat(3), ExtNat(1)});
  CHECK(R->dimension(x) == ExtNat(5));
  CHECK(R->dimension(y) == ExtNat(5));
  CHECK(R->dimension(R->add(x, y)) == ExtNat(10));
  CHECK(R->dimension(R->tensor(x, y)) == ExtNat(25));
  CHECK(R->dimension(R->regular_rep()) == ExtNat(6));
}

TEST_CASE("componentwise order with finiteness deciding compactness") {
  auto R = resolve_rep_semiring("cyclic:2");
  const Elem fin = R->make_vec({ExtNat(1), ExtNat(2)});
  const Elem part = R->make_vec({ExtNat(1), inf()});
  CHECK(R->leq(fin, part));
  CHECK(R->way_below(fin, fin));
  CHECK(R->way_below(fin, part));
  CHECK(!R->way_below(part, part));
  CHECK(R->equal(R->approximant(part, 3), R->make_vec({ExtNat(1), ExtNat(3)})));
  CHECK(R->equal(R->nat_scale(ExtNat::infinity(), fin), R->make_vec({inf(), inf()})));
  CHECK(R->format(part) == "rep:1,inf");
  CHECK(R->equal(R->parse("rep:1,inf"), part));
  CHECK_THROWS_AS(R->parse("rep:1"), ParseError);
  CHECK_THROWS_AS(R->parse("rep:1,2,3"), ParseError);
}

TEST_CASE("a loaded multiplication and character table matches the synthesized ring") {
  TempFile z3(
      "3\n"
      "0 1 2\n"
      "1 2 0\n"
      "2 0 1\n");
  TempFile chars(
      "exponent 3\n"
      "classes 1 1 1\n"
      "1 [1,0,0] [1,0,0] [1,0,0]\n"
      "1 [1,0,0] [0,1,0] [0,0,1]\n"
      "1 [1,0,0] [0,0,1] [0,1,0]\n");

  // Loaded tables carry no cyclic factors, so characters cannot be synthesized.
  CHECK_THROWS_AS(resolve_rep_semiring("table:" + z3.path), DomainError);

  auto loaded = resolve_rep_semiring("table:" + z3.path, "", chars.path);
  auto synth = resolve_rep_semiring("cyclic:3");
  CHECK(loaded->fusion_numeric() == synth->fusion_numeric());
  CHECK(loaded->fusion_residue() <= 1e-9);
}
