#include <string>
#include <vector>

#include "cucalc/base_semigroups.hpp"
#include "cucalc/fixed_point.hpp"
#include "cucalc/fn_product.hpp"
#include "cucalc/gallery.hpp"
#include "cucalc/pullback.hpp"
#include "cucalc/step_lsc.hpp"
#include "cucalc/uhf.hpp"
#include "doctest.h"

using namespace cucalc;

namespace {

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::string first_failure(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    for (const auto& a : r.axioms)
      if (!a.pass) return r.suite + " / " + a.name + ": " + a.detail;
  return "";
}

const Report* find_frozen(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.suite.rfind("frozen:", 0) == 0) return &r;
  return nullptr;
}

std::string key_value(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.keys)
    if (k == key) return v;
  return "<missing>";
}

}  // namespace

TEST_CASE("every advertised family instantiates at its template index") {
  CHECK(gallery_families().size() == 7);
  const char* names[] = {"w",          "nonstable",       "uhf:2",       "uhf-circle:2",
                         "w-circle:1", "pullback-uhf:2",  "pullback-w:1"};
  for (const char* n : names) {
    CAPTURE(n);
    GalleryEntry e = gallery_entry(n);
    CHECK(e.name == n);
    CHECK_FALSE(e.summary.empty());
    REQUIRE_FALSE(e.carriers.empty());
    CHECK(e.carrier() != nullptr);
  }
}

TEST_CASE("unknown names and out-of-range indices are rejected") {
  CHECK_THROWS_AS(gallery_entry("bogus"), DomainError);
  CHECK_THROWS_AS(gallery_entry("uhf:1"), DomainError);       // family starts at 2
  CHECK_THROWS_AS(gallery_entry("uhf-circle:1"), DomainError);
  CHECK_THROWS_AS(gallery_entry("w-circle:0"), DomainError);
  CHECK_THROWS_AS(gallery_entry("pullback-uhf:25"), DomainError);
  CHECK_THROWS_AS(gallery_entry("uhf:x"), DomainError);
}

TEST_CASE("entry shapes: carriers, modules, morphisms") {
  GalleryEntry ns = gallery_entry("nonstable");
  CHECK(ns.carriers.size() == 2);
  CHECK(ns.module == nullptr);

  GalleryEntry w = gallery_entry("w");
  CHECK(w.carriers.size() == 1);
  CHECK(w.module != nullptr);

  // The uhf-flavored pullback exposes eval0, the embedded sum, and the raw
  // sum into nat; the rational flavor has no separate raw sum.
  CHECK(gallery_entry("pullback-uhf:2").morphisms.size() == 3);
  CHECK(gallery_entry("pullback-w:1").morphisms.size() == 2);
  CHECK(gallery_entry("uhf-circle:2").morphisms.size() == 1);
}

TEST_CASE("scalar entries verify with their frozen landmarks") {
  CheckOptions o;
  o.seed = 11;
  o.samples = 120;

  auto wrep = gallery_entry("w").verify(o);
  CHECK(all_pass(wrep));
  INFO(first_failure(wrep));
  const Report* wf = find_frozen(wrep);
  REQUIRE(wf);
  CHECK(wf->suite == "frozen:w");
  REQUIRE(wf->axioms.size() == 3);
  CHECK(wf->axioms[0].name == "STRICT_CHAIN_SUP");
  CHECK(wf->axioms[1].name == "HALF_NOT_COMPACT");
  CHECK(wf->axioms[2].name == "ZERO_COMPACT");

  auto urep = gallery_entry("uhf:2").verify(o);
  INFO(first_failure(urep));
  CHECK(all_pass(urep));
  const Report* uf = find_frozen(urep);
  REQUIRE(uf);
  CHECK(key_value(*uf, "act-regular") == "uhf2:compact:1");
}

TEST_CASE("the atom-count entry separates its two carriers") {
  CheckOptions o;
  o.seed = 21;
  o.samples = 100;
  auto reports = gallery_entry("nonstable").verify(o);
  INFO(first_failure(reports));
  CHECK(all_pass(reports));
  const Report* fr = find_frozen(reports);
  REQUIRE(fr);
  CHECK(key_value(*fr, "atoms-left") == "1");
  CHECK(key_value(*fr, "atoms-right") == "4");
  CHECK(key_value(*fr, "separating-invariant") == "atom-count");
  bool has_not_isomorphic = false;
  for (const auto& a : fr->axioms)
    if (a.name == "NOT_ISOMORPHIC" && a.pass) has_not_isomorphic = true;
  CHECK(has_not_isomorphic);
}

TEST_CASE("rotation-invariant entries verify at reduced sample counts") {
  CheckOptions o;
  o.seed = 31;
  o.samples = 12;
  for (const char* n : {"uhf-circle:2", "w-circle:1"}) {
    CAPTURE(n);
    auto reports = gallery_entry(n).verify(o);
    INFO(first_failure(reports));
    CHECK(all_pass(reports));
  }
}

TEST_CASE("fiber-product entries verify at reduced sample counts") {
  CheckOptions o;
  o.seed = 41;
  o.samples = 8;
  for (const char* n : {"pullback-uhf:2", "pullback-w:1"}) {
    CAPTURE(n);
    auto reports = gallery_entry(n).verify(o);
    INFO(first_failure(reports));
    CHECK(all_pass(reports));
    const Report* fr = find_frozen(reports);
    REQUIRE(fr);
    CHECK(key_value(*fr, "landmark-pair") != "<missing>");
  }
}

// A constrained pair whose components are individually compact-valued: the
// componentwise family would satisfy the fiber constraint at some levels and
// not others, so the carrier must route every level through the pinned hook.
// Mixing the two families silently breaks consecutive way-below.
TEST_CASE("constrained-pair approximants are consecutively way-below") {
  GalleryEntry e = gallery_entry("pullback-uhf:2");
  auto P = std::dynamic_pointer_cast<const PullbackCu>(e.carrier());
  REQUIRE(P);
  auto A = std::dynamic_pointer_cast<const FixedPointView>(P->leg_a());
  REQUIRE(A);
  auto S = std::dynamic_pointer_cast<const StepLscCu>(A->base());
  REQUIRE(S);
  auto B = std::dynamic_pointer_cast<const FnCu>(P->leg_b());
  REQUIRE(B);
  auto U = UhfCu::instance(2);
  const auto& nat = static_cast<const NatCu&>(*NatCu::instance());

  // Invariant under rotation by 1/2 (7/10 = 1/5 + 1/2), evaluating to the
  // compact 1 at the origin; paired against the unit mass at index 0.
  Elem f = S->make_step({Rational(1, 5), Rational(7, 10)},
                        {U->compact(Rational(1)), U->compact(Rational(1))},
                        {U->soft(ExtRat(Rational(1))), U->soft(ExtRat(Rational(1)))});
  REQUIRE(A->is_member(f));
  Elem g = B->make_fn({nat.make(ExtNat(1)), nat.make(ExtNat(0))});
  Elem p = P->make_pair(A->wrap(f), g);

  Elem prev = P->approximant(p, 0);
  CHECK(P->leq(prev, p));
  for (int k = 1; k <= 6; ++k) {
    Elem cur = P->approximant(p, k);
    CAPTURE(k);
    CHECK(P->leq(cur, p));
    CHECK(P->way_below(prev, cur));
    // Fiber constraint holds exactly at every level.
    Elem lhs = (*P->phi())(P->first(cur));
    Elem rhs = (*P->psi())(P->second(cur));
    CHECK(U->equal(lhs, rhs));
    prev = cur;
  }
}

TEST_CASE("pullback pair literals round-trip through format and parse") {
  GalleryEntry e = gallery_entry("pullback-uhf:2");
  const SemigroupPtr& P = e.carrier();
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    Elem x = P->sample(rng);
    Elem back = P->parse(P->format(x));
    CHECK(P->equal(x, back));
  }
}
