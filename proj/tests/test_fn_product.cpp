#include "cucalc/fn_product.hpp"

#include "cucalc/axioms.hpp"
#include "cucalc/base_semigroups.hpp"

#include "doctest.h"

using namespace cucalc;

namespace {

const NatCu& nat() { return static_cast<const NatCu&>(*NatCu::instance()); }

Elem tuple(const FnCuPtr& F, std::vector<long long> entries) {
  std::vector<Elem> v;
  for (long long e : entries)
    v.push_back(e < 0 ? nat().make(ExtNat::infinity()) : nat().make(ExtNat(e)));
  return F->make_fn(std::move(v));
}

}  // namespace

TEST_CASE("construction and naming") {
  auto F = FnCu::make(NatCu::instance(), 3, {3});
  CHECK(F->name() == "fn:nat:3");
  CHECK(F->size() == 3);
  CHECK(F->has_translation());
  CHECK_THROWS_AS(FnCu::make(NatCu::instance(), 0), DomainError);
  CHECK_THROWS_AS(FnCu::make(NatCu::instance(), 4, {3}), DomainError);  // 3 != 4
  CHECK_THROWS_AS(F->make_fn({nat().make(ExtNat(1))}), DomainError);    // arity
  auto plain = FnCu::make(NatCu::instance(), 2);
  CHECK(!plain->has_translation());
  CHECK_THROWS_AS(plain->translate(1, plain->zero()), DomainError);
}

TEST_CASE("pointwise structure") {
  auto F = FnCu::make(NatCu::instance(), 3, {3});
  const Elem a = tuple(F, {1, 2, 0});
  const Elem b = tuple(F, {2, 2, 1});
  CHECK(F->equal(F->add(a, b), tuple(F, {3, 4, 1})));
  CHECK(F->leq(a, b));
  CHECK(!F->leq(b, a));
  CHECK(F->way_below(a, b));
  CHECK(F->equal(*F->meet(a, b), tuple(F, {1, 2, 0})));
  CHECK(F->equal(F->nat_scale(ExtNat(2), a), tuple(F, {2, 4, 0})));
  CHECK(F->equal(F->nat_scale(ExtNat::infinity(), a), tuple(F, {-1, -1, 0})));
  CHECK(F->atoms()->count == ExtNat(3));
}

TEST_CASE("translation is the regular action on indices") {
  auto F = FnCu::make(NatCu::instance(), 4, {4});
  const Elem x = tuple(F, {5, 6, 7, 8});
  // (tau . x)(eta) = x(tau + eta)
  CHECK(F->equal(F->translate(0, x), x));
  CHECK(F->equal(F->translate(1, x), tuple(F, {6, 7, 8, 5})));
  CHECK(F->equal(F->translate(3, x), tuple(F, {8, 5, 6, 7})));
  // composing translations adds the offsets
  CHECK(F->equal(F->translate(1, F->translate(2, x)), F->translate(3, x)));
  // four applications of the generator return home
  Elem y = x;
  for (int i = 0; i < 4; ++i) y = F->translate(1, y);
  CHECK(F->equal(y, x));
  CHECK_THROWS_AS(F->translate(4, x), DomainError);

  // multi-factor index sets translate componentwise
  auto G = FnCu::make(NatCu::instance(), 4, {2, 2});
  const Elem z = tuple(G, {1, 2, 3, 4});
  // tau = 1 = (0,1): (i,j) -> (i, j+1)
  CHECK(G->equal(G->translate(1, z), tuple(G, {2, 1, 4, 3})));
  // tau = 2 = (1,0): (i,j) -> (i+1, j)
  CHECK(G->equal(G->translate(2, z), tuple(G, {3, 4, 1, 2})));
}

TEST_CASE("translation is an order automorphism") {
  auto F = FnCu::make(NatCu::instance(), 3, {3});
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Elem x = F->sample(rng);
    const Elem y = F->sample(rng);
    const int tau = static_cast<int>(rng.below(3));
    CHECK(F->equal(F->translate(tau, F->add(x, y)),
                   F->add(F->translate(tau, x), F->translate(tau, y))));
    CHECK(F->leq(x, y) == F->leq(F->translate(tau, x), F->translate(tau, y)));
    CHECK(F->way_below(x, y) == F->way_below(F->translate(tau, x), F->translate(tau, y)));
    CHECK(F->equal(F->translate(tau, F->approximant(x, 3)),
                   F->approximant(F->translate(tau, x), 3)));
  }
}

TEST_CASE("truncations of infinite multiplicities are way below and recover the value") {
  // exhaustive over tuples with entries in {0, 1, 2, inf} for ranks 2 and 3
  for (int rank : {2, 3}) {
    auto F = FnCu::make(NatCu::instance(), rank, {rank});
    const long long kinds[] = {0, 1, 2, -1};  // -1 encodes inf
    int total = 1;
    for (int i = 0; i < rank; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
      std::vector<long long> entries;
      int c = code;
      for (int i = 0; i < rank; ++i) {
        entries.push_back(kinds[c % 4]);
        c /= 4;
      }
      const Elem x = tuple(F, entries);
      for (int k = 0; k < 4; ++k) {
        const Elem t = F->approximant(x, k);
        CHECK(F->way_below(t, x));
        CHECK(F->way_below(t, F->approximant(x, k + 1)));
        CHECK(F->leq(t, x));
      }
      CHECK(chain_sup_oracle(F, F->canonical_chain(x), x, OracleParams{}) == "");
    }
  }
}

TEST_CASE("literals round trip") {
  auto F = FnCu::make(NatCu::instance(), 2, {2});
  CHECK(F->format(F->parse("fn:nat:3,nat:inf")) == "fn:nat:3,nat:inf");
  CHECK_THROWS_AS(F->parse("fn:nat:1"), ParseError);
  CHECK_THROWS_AS(F->parse("nat:1,nat:2"), ParseError);
}
