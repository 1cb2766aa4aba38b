#include "cucalc/base_semigroups.hpp"
#include "cucalc/errors.hpp"
#include "cucalc/fn_product.hpp"
#include "cucalc/gallery.hpp"
#include "cucalc/registry.hpp"
#include "cucalc/uhf.hpp"
#include "doctest.h"

using namespace cucalc;

TEST_CASE("scalar carrier names resolve to the shared instances") {
  CHECK(resolve_semigroup("nat") == NatCu::instance());
  CHECK(resolve_semigroup("rat") == RatCu::instance());
}

TEST_CASE("uhf specs resolve by base and share the per-base instance") {
  CHECK(resolve_semigroup("uhf2")->name() == "uhf2");
  CHECK(resolve_semigroup("uhf7")->name() == "uhf7");
  CHECK(resolve_semigroup("uhf7") == UhfCu::instance(7));

  CHECK_THROWS_AS(resolve_semigroup("uhf0"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("uhf1"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("uhf10001"), ParseError);
  // A non-digit suffix is not a uhf spec at all; it falls to the unknown branch.
  CHECK_THROWS_AS(resolve_semigroup("uhfx"), ParseError);
}

TEST_CASE("group and function carriers resolve with structured names") {
  CHECK(resolve_semigroup("cug:cyclic:3")->name() == "cug:cyclic:3");
  CHECK(resolve_semigroup("step:uhf2")->name() == "step:uhf2");

  SemigroupPtr F = resolve_semigroup("fn:nat:3");
  CHECK(F->name() == "fn:nat:3");
  auto fn = std::dynamic_pointer_cast<const FnCu>(F);
  REQUIRE(fn);
  CHECK(fn->size() == 3);
}

TEST_CASE("carrier constructors nest") {
  CHECK(resolve_semigroup("fn:fn:nat:2:3")->name() == "fn:fn:nat:2:3");
  CHECK(resolve_semigroup("step:step:nat")->name() == "step:step:nat");
  CHECK(resolve_semigroup("fn:step:uhf2:2")->name() == "fn:step:uhf2:2");
}

TEST_CASE("malformed specs raise parse errors with usable messages") {
  CHECK_THROWS_AS(resolve_semigroup("fn:nat:0"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("fn:nat:65"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("fn:nat"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("cug:bogus"), ParseError);
  CHECK_THROWS_AS(resolve_semigroup("cug:table"), ParseError);  // no table path supplied
  CHECK_THROWS_WITH_AS(resolve_semigroup("frobnicate"),
                       doctest::Contains("unknown carrier"), ParseError);
}

TEST_CASE("gallery carriers are reachable through the example prefix") {
  SemigroupPtr W = resolve_semigroup("example:w");
  CHECK(W->name() == gallery_entry("w").carrier()->name());
  CHECK_THROWS_AS(resolve_semigroup("example:bogus"), DomainError);
}
