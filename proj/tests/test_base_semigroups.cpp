#include "cucalc/base_semigroups.hpp"

#include "doctest.h"

using namespace cucalc;

static const NatCu& nat() { return static_cast<const NatCu&>(*NatCu::instance()); }
static const RatCu& rat() { return static_cast<const RatCu&>(*RatCu::instance()); }

TEST_CASE("extended naturals as a carrier") {
  auto N = NatCu::instance();
  const Elem two = nat().make(ExtNat(2));
  const Elem three = nat().make(ExtNat(3));
  const Elem inf = nat().make(ExtNat::infinity());

  CHECK(N->equal(N->add(two, three), nat().make(ExtNat(5))));
  CHECK(N->leq(two, three));
  CHECK(!N->leq(three, two));
  CHECK(N->way_below(three, three));
  CHECK(N->way_below(three, inf));
  CHECK(!N->way_below(inf, inf));
  CHECK(N->equal(N->approximant(inf, 4), nat().make(ExtNat(4))));
  CHECK(N->equal(N->nat_scale(ExtNat(3), two), nat().make(ExtNat(6))));
  CHECK(N->equal(N->nat_scale(ExtNat::infinity(), two), inf));
  CHECK(N->equal(N->nat_scale(ExtNat::infinity(), N->zero()), N->zero()));
  CHECK(N->meet(two, three).has_value());
  CHECK(N->equal(*N->meet(two, three), two));
  CHECK(N->atoms()->count == ExtNat(1));
}

TEST_CASE("extended rationals as a carrier") {
  auto R = RatCu::instance();
  const Elem half = rat().make(ExtRat(Rational(1, 2)));
  const Elem one = rat().make(ExtRat(Rational(1)));
  const Elem inf = rat().make(ExtRat::infinity());

  CHECK(R->equal(R->add(half, half), one));
  CHECK(R->way_below(R->zero(), R->zero()));
  CHECK(!R->way_below(half, half));  // nothing nonzero is compact
  CHECK(R->way_below(half, one));
  CHECK(R->leq(half, one));
  CHECK(R->equal(R->nat_scale(ExtNat::infinity(), half), inf));
  CHECK(R->atoms()->none);
  // approximants climb strictly toward the value
  CHECK(R->leq(R->approximant(one, 0), R->approximant(one, 1)));
  CHECK(R->way_below(R->approximant(one, 0), R->approximant(one, 1)));
  CHECK(!R->equal(R->approximant(one, 0), one));
}

TEST_CASE("literal round trips and parse failures") {
  auto N = NatCu::instance();
  auto R = RatCu::instance();
  for (const char* lit : {"nat:0", "nat:17", "nat:inf"})
    CHECK(N->format(N->parse(lit)) == lit);
  for (const char* lit : {"rat:0", "rat:7/3", "rat:inf"})
    CHECK(R->format(R->parse(lit)) == lit);
  CHECK(N->format(N->parse("  nat:4 ")) == "nat:4");
  CHECK_THROWS_AS(N->parse("rat:1"), ParseError);
  CHECK_THROWS_AS(N->parse("nat:-1"), ParseError);
  CHECK_THROWS_AS(R->parse("rat:"), ParseError);
  CHECK_THROWS_AS(R->parse("rat:1/0"), ParseError);
}

TEST_CASE("elements refuse operations in a foreign semigroup") {
  auto N = NatCu::instance();
  auto R = RatCu::instance();
  const Elem n1 = nat().make(ExtNat(1));
  const Elem r1 = rat().make(ExtRat(Rational(1)));
  CHECK_THROWS_AS(N->add(n1, r1), DomainError);
  CHECK_THROWS_AS(R->leq(n1, r1), DomainError);
  CHECK_THROWS_AS(N->approximant(n1, -1), PreconditionError);
}

TEST_CASE("finite and registered chains carry their suprema") {
  auto N = NatCu::instance();
  const Elem a = nat().make(ExtNat(1));
  const Elem b = nat().make(ExtNat(3));
  CHECK(N->equal(N->sup_list({a, b}), b));
  CHECK_THROWS_AS(N->sup_list({b, a}), PreconditionError);
  CHECK(N->equal(N->sup_chain(Chain::finite({a, b})), b));

  const Elem inf = nat().make(ExtNat::infinity());
  Chain approx = Chain::approximants(inf);
  CHECK(N->equal(approx.term(5), nat().make(ExtNat(5))));
  CHECK(N->equal(N->sup_chain(approx), inf));

  Chain scaled = Chain::scaled(a);
  CHECK(N->equal(scaled.term(2), nat().make(ExtNat(2))));
  CHECK(N->equal(N->sup_chain(scaled), inf));

  Chain bare = Chain::unregistered([&](int k) { return nat().make(ExtNat(k)); });
  CHECK_THROWS_AS(N->sup_chain(bare), UnsupportedChainError);
}
