#include "cucalc/semimodule.hpp"

#include "cucalc/axioms.hpp"
#include "cucalc/base_semigroups.hpp"
#include "cucalc/uhf.hpp"

#include "doctest.h"

using namespace cucalc;

TEST_CASE("trivial structure: only the weighted dimension acts") {
  auto ring = resolve_rep_semiring("cyclic:2");
  auto U = UhfCu::instance(2);
  auto M = CuSemimodule::make_trivial(ring, U);
  CHECK(M->kind() == ActionKind::Trivial);
  CHECK(M->claims_unital());
  CHECK(M->claims_tensor_compat());

  const Elem half = U->compact(Rational(1, 2));
  // scalars with equal dimension act identically
  const Elem a = ring->make_vec({ExtNat(0), ExtNat(2)});
  const Elem b = ring->make_vec({ExtNat(2), ExtNat(0)});
  const Elem c = ring->make_vec({ExtNat(1), ExtNat(1)});
  CHECK(U->equal(M->act(a, half), M->act(b, half)));
  CHECK(U->equal(M->act(a, half), M->act(c, half)));
  CHECK(U->equal(M->act(a, half), U->compact(Rational(1))));
  CHECK(U->equal(M->act(ring->zero(), half), U->zero()));
  CHECK(U->equal(M->act(ring->one(), half), half));
  const Elem infvec = ring->make_vec({ExtNat::infinity(), ExtNat(0)});
  CHECK(U->equal(M->act(infvec, half), U->soft(ExtRat::infinity())));
  CHECK(U->equal(M->act(infvec, U->zero()), U->zero()));

  CheckOptions opts;
  opts.samples = 80;
  CHECK(check_semimodule(M, opts).pass());
}

TEST_CASE("dual translation: irreducibles shift the coordinates") {
  auto ring = resolve_rep_semiring("cyclic:3");
  auto F = FnCu::make(NatCu::instance(), 3, {3});
  auto M = CuSemimodule::make_dual_translation(ring, F);
  CHECK(M->kind() == ActionKind::DualTranslation);

  auto& nat = static_cast<const NatCu&>(*NatCu::instance());
  const Elem f = F->make_fn({nat.make(ExtNat(5)), nat.make(ExtNat(6)), nat.make(ExtNat(7))});
  CHECK(F->equal(M->act(ring->one(), f), f));
  const Elem shifted = M->act(ring->irrep(1), f);
  CHECK(F->equal(shifted,
                 F->make_fn({nat.make(ExtNat(6)), nat.make(ExtNat(7)), nat.make(ExtNat(5))})));
  Elem thrice = f;
  for (int i = 0; i < 3; ++i) thrice = M->act(ring->irrep(1), thrice);
  CHECK(F->equal(thrice, f));
  // a two-element scalar adds the two translates
  const Elem both = ring->make_vec({ExtNat(1), ExtNat(1), ExtNat(0)});
  CHECK(F->equal(M->act(both, f), F->add(f, shifted)));

  CheckOptions opts;
  opts.samples = 80;
  CHECK(check_semimodule(M, opts).pass());

  // carriers that do not match the dual group are rejected
  auto F2 = FnCu::make(NatCu::instance(), 2, {2});
  CHECK_THROWS_AS(CuSemimodule::make_dual_translation(ring, F2), PreconditionError);
  auto s3 = resolve_rep_semiring("s3");
  auto F6 = FnCu::make(NatCu::instance(), 6, {6});
  CHECK_THROWS_AS(CuSemimodule::make_dual_translation(s3, F6), PreconditionError);
}

TEST_CASE("multiplicity scaling acts coordinatewise over the irreps") {
  auto ring = resolve_rep_semiring("s3");
  auto F = FnCu::make(NatCu::instance(), 3);
  auto M = CuSemimodule::make_tensor_scaling(ring, F);
  CHECK(M->kind() == ActionKind::TensorScaling);
  CHECK(!M->claims_unital());
  CHECK(!M->claims_tensor_compat());

  auto& nat = static_cast<const NatCu&>(*NatCu::instance());
  const Elem f = F->make_fn({nat.make(ExtNat(5)), nat.make(ExtNat(6)), nat.make(ExtNat(7))});
  // the standard representation keeps only its own coordinate
  CHECK(F->equal(M->act(ring->irrep(2), f),
                 F->make_fn({nat.make(ExtNat(0)), nat.make(ExtNat(0)), nat.make(ExtNat(7))})));
  // the regular representation scales coordinate pi by its dimension
  CHECK(F->equal(M->act(ring->regular_rep(), f),
                 F->make_fn({nat.make(ExtNat(5)), nat.make(ExtNat(6)), nat.make(ExtNat(14))})));

  CheckOptions opts;
  opts.samples = 80;
  CHECK(check_semimodule(M, opts).pass());

  CHECK_THROWS_AS(CuSemimodule::make_tensor_scaling(ring, FnCu::make(NatCu::instance(), 2)),
                  PreconditionError);
}

TEST_CASE("construction-time spot checks reject lawless actions") {
  auto ring = resolve_rep_semiring("cyclic:2");
  auto N = NatCu::instance();
  // ignores the scalar entirely: act(0, x) = x != 0
  CHECK_THROWS_AS(CuSemimodule::make_custom("bogus", ActionKind::Custom, ring, N,
                                            [](const Elem&, const Elem& x) { return x; },
                                            false, false),
                  InvalidActionError);
  // claims the unit law but doubles
  auto doubling = [N, ring](const Elem& r, const Elem& x) {
    return N->nat_scale(ring->dimension(r) + ring->dimension(r), x);
  };
  CHECK_THROWS_AS(CuSemimodule::make_custom("double", ActionKind::Custom, ring, N, doubling,
                                            true, false),
                  InvalidActionError);
  // the same action without the unit claim is a lawful semimodule
  auto M = CuSemimodule::make_custom("double", ActionKind::Custom, ring, N, doubling, false,
                                     false);
  CheckOptions opts;
  opts.samples = 60;
  CHECK(check_semimodule(M, opts).pass());
}
