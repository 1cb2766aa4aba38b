#include "cucalc/gallery.hpp"

#include <cstdlib>

#include "cucalc/base_semigroups.hpp"
#include "cucalc/fixed_point.hpp"
#include "cucalc/fn_product.hpp"
#include "cucalc/pullback.hpp"
#include "cucalc/rep_semiring.hpp"
#include "cucalc/step_lsc.hpp"
#include "cucalc/uhf.hpp"

namespace cucalc {

namespace {

int family_index(const std::string& name, std::size_t prefix_len, int lo) {
  const std::string digits = name.substr(prefix_len);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("bad example index in '" + name + "'");
  const long v = std::strtol(digits.c_str(), nullptr, 10);
  if (v < lo || v > 24)
    throw DomainError("example index out of range in '" + name + "' (allowed " +
                      std::to_string(lo) + "..24)");
  return static_cast<int>(v);
}

Report frozen_report(const std::string& entry_name) {
  Report r;
  r.suite = "frozen:" + entry_name;
  r.seed = 0;
  r.samples = 0;
  return r;
}

void row(Report& r, std::string name, bool ok, std::string detail) {
  r.axioms.push_back(AxiomResult{std::move(name), ok, ok ? "" : std::move(detail)});
}

MorphismPtr rotation(const StepLscPtr& S, const Rational& r) {
  return std::make_shared<CuMorphism>(
      "rotate:" + r.str(), S, S, [S, r](const Elem& f) { return S->rotate(f, r); });
}

FixedPointPtr circle_view(const StepLscPtr& S, int n) {
  FixedPointView::Generator g{rotation(S, Rational(1, n)), rotation(S, Rational(n - 1, n))};
  return FixedPointView::make(S, {g});
}

std::vector<Rational> orbit_points(int n) {
  std::vector<Rational> pts;
  for (int i = 0; i < n; ++i) pts.push_back(Rational(i, n));
  return pts;
}

// ---- scalar entries -------------------------------------------------------

GalleryEntry make_uhf_entry(int m) {
  auto U = UhfCu::instance(m);
  auto ring = resolve_rep_semiring("cyclic:" + std::to_string(m));
  auto mod = CuSemimodule::make_trivial(ring, U);

  GalleryEntry e;
  e.name = "uhf:" + std::to_string(m);
  e.summary = "doubled Z[1/" + std::to_string(m) +
              "] line (compact and soft parts) with the dimension action of cyclic:" +
              std::to_string(m);
  e.carriers = {U};
  e.module = mod;
  e.verify = [U, ring, mod, m, name = e.name](const CheckOptions& o) {
    std::vector<Report> out;
    out.push_back(check_axioms(U, o));
    out.push_back(check_semimodule(mod, o));

    Report fr = frozen_report(name);
    const Elem x = U->compact(Rational(1, m));
    const Elem line = mod->act(ring->irrep(m > 1 ? 1 : 0), x);
    row(fr, "ACT_LINE_FIXES", U->equal(line, x), U->format(line));
    const Elem reg = mod->act(ring->regular_rep(), x);
    const Elem one = U->compact(Rational(1));
    row(fr, "ACT_REGULAR_SUMS", U->equal(reg, one), U->format(reg));
    fr.keys.push_back({"act-line", U->format(line)});
    fr.keys.push_back({"act-regular", U->format(reg)});
    out.push_back(std::move(fr));
    return out;
  };
  return e;
}

GalleryEntry make_w_entry() {
  auto R = RatCu::instance();
  auto rat = std::static_pointer_cast<const RatCu>(R);
  auto ring = resolve_rep_semiring("cyclic:2");
  auto mod = CuSemimodule::make_trivial(ring, R);

  GalleryEntry e;
  e.name = "w";
  e.summary = "extended nonnegative rationals: no nonzero compact elements";
  e.carriers = {R};
  e.module = mod;
  e.verify = [R, rat, mod, name = e.name](const CheckOptions& o) {
    std::vector<Report> out;
    out.push_back(check_axioms(R, o));
    out.push_back(check_semimodule(mod, o));

    Report fr = frozen_report(name);
    const Elem one = rat->make(ExtRat(Rational(1)));
    Chain c = Chain::unregistered(
        [rat](int k) { return rat->make(ExtRat(Rational(k + 1, k + 2))); });
    const std::string err = chain_sup_oracle(R, c, one, o.oracle);
    row(fr, "STRICT_CHAIN_SUP", err.empty(), err);
    const Elem half = rat->make(ExtRat(Rational(1, 2)));
    row(fr, "HALF_NOT_COMPACT", !R->way_below(half, half), R->format(half));
    row(fr, "ZERO_COMPACT", R->way_below(R->zero(), R->zero()), "zero not compact");
    fr.keys.push_back({"chain-sup", R->format(one)});
    out.push_back(std::move(fr));
    return out;
  };
  return e;
}

// ---- rotation-invariant step-function entries ------------------------------

GalleryEntry make_circle_entry(int n, bool uhf_flavor) {
  SemigroupPtr base = uhf_flavor ? SemigroupPtr(UhfCu::instance(n)) : RatCu::instance();
  auto S = StepLscCu::make(base);
  auto A = circle_view(S, n);
  auto ring = resolve_rep_semiring("cyclic:" + std::to_string(n));
  auto mod = CuSemimodule::make_trivial(ring, A);

  GalleryEntry e;
  e.name = (uhf_flavor ? std::string("uhf-circle:") : std::string("w-circle:")) +
           std::to_string(n);
  e.summary = "step functions on the circle over " + base->name() +
              " fixed by rotation of order " + std::to_string(n);
  e.carriers = {A};
  e.module = mod;
  e.morphisms = {A->generators()[0].forward};
  e.verify = [S, A, mod, base, n, name = e.name](const CheckOptions& o) {
    std::vector<Report> out;
    out.push_back(check_axioms(A, o));
    out.push_back(check_semimodule(mod, o));

    Report fr = frozen_report(name);
    const Elem lo = base->parse(base->name() == "rat" ? "rat:1"
                                                      : base->name() + ":compact:1");
    const Elem hi = base->parse(base->name() == "rat" ? "rat:2"
                                                      : base->name() + ":compact:2");
    row(fr, "CONST_MEMBER", A->is_member(S->constant(hi)), S->format(S->constant(hi)));
    if (n >= 2) {
      const Elem block =
          S->make_step({Rational(0), Rational(1, n)}, {lo, hi}, {lo, lo});
      row(fr, "BLOCK_NOT_MEMBER", !A->is_member(block), S->format(block));
    }
    std::vector<Rational> br;
    std::vector<Elem> arcs, pts;
    for (int i = 0; i < 2 * n; ++i) {
      br.push_back(Rational(i, 2 * n));
      arcs.push_back(i % 2 == 0 ? lo : hi);
      pts.push_back(lo);
    }
    const Elem periodic = S->make_step(br, arcs, pts);
    row(fr, "PERIODIC_MEMBER", A->is_member(periodic), S->format(periodic));
    out.push_back(std::move(fr));
    return out;
  };
  return e;
}

// ---- fiber-product entries --------------------------------------------------

struct PullbackBundle {
  PullbackPtr P;
  FixedPointPtr A;
  StepLscPtr S;
  FnCuPtr B;
  MorphismPtr phi, psi, sum_leg;
  RepSemiringPtr ring;
  SemimodulePtr mod;
};

PullbackBundle build_pullback(int n, bool uhf_flavor) {
  PullbackBundle z;
  SemigroupPtr target = uhf_flavor ? SemigroupPtr(UhfCu::instance(n)) : RatCu::instance();
  z.S = StepLscCu::make(target);
  z.A = circle_view(z.S, n);
  const std::vector<Rational> anchors = orbit_points(n);

  z.phi = std::make_shared<CuMorphism>(
      "eval0", z.A, target,
      [A = z.A, S = z.S](const Elem& x) { return S->eval(A->value(x), Rational(0)); });
  z.phi->set_pinned_approx(
      [A = z.A, S = z.S, anchors](const Elem& a, const std::function<Elem(int)>& tc, int k) {
        return A->wrap(S->pinned_approximant(A->value(a), anchors, tc, k));
      });
  z.phi->set_section([A = z.A, S = z.S, anchors](const Elem& t, Rng& rng) {
    Elem s = A->sample(rng);
    Elem forced = S->force_value_at(A->value(s), anchors, t);
    if (A->is_member(forced)) return A->wrap(forced);
    return A->wrap(S->force_value_at(S->zero(), anchors, t));
  });

  Elem a0, g0;
  if (uhf_flavor) {
    auto U = UhfCu::instance(n);
    auto nat = std::static_pointer_cast<const NatCu>(NatCu::instance());
    z.B = FnCu::make(NatCu::instance(), n, {n});
    z.psi = std::make_shared<CuMorphism>(
        "sum-embed", z.B, target, [B = z.B, nat, U](const Elem& g) {
          ExtNat total(0);
          for (const Elem& v : B->values(g)) total = total + nat->value(v);
          return total.is_infinite() ? U->soft(ExtRat::infinity())
                                     : U->compact(Rational(total.finite_value()));
        });
    z.sum_leg = std::make_shared<CuMorphism>(
        "sum", z.B, NatCu::instance(), [B = z.B, nat](const Elem& g) {
          ExtNat total(0);
          for (const Elem& v : B->values(g)) total = total + nat->value(v);
          return nat->make(total);
        });
    std::vector<Elem> arcs(static_cast<size_t>(n), U->soft(ExtRat(Rational(3, 2))));
    std::vector<Elem> pts(static_cast<size_t>(n), U->compact(Rational(1)));
    a0 = z.A->wrap(z.S->make_step(anchors, arcs, pts));
    std::vector<Elem> gv(static_cast<size_t>(n), nat->make(ExtNat(0)));
    gv[0] = nat->make(ExtNat(1));
    g0 = z.B->make_fn(std::move(gv));
  } else {
    auto rat = std::static_pointer_cast<const RatCu>(RatCu::instance());
    z.B = FnCu::make(RatCu::instance(), n, {n});
    z.psi = std::make_shared<CuMorphism>("sum", z.B, target, [B = z.B, rat](const Elem& g) {
      ExtRat total{Rational(0)};
      for (const Elem& v : B->values(g)) total = total + rat->value(v);
      return rat->make(total);
    });
    a0 = z.A->wrap(z.S->constant(rat->make(ExtRat(Rational(1)))));
    std::vector<Elem> gv(static_cast<size_t>(n), rat->make(ExtRat(Rational(0))));
    gv[0] = rat->make(ExtRat(Rational(1)));
    g0 = z.B->make_fn(std::move(gv));
  }

  auto pm = std::make_shared<PullbackCu>(z.phi, z.psi);
  pm->set_witness(pm->make_pair(a0, g0));
  z.P = pm;

  z.ring = resolve_rep_semiring("cyclic:" + std::to_string(n));
  z.mod = CuSemimodule::make_from_irrep_action(
      "dual:" + z.P->name(), ActionKind::DualTranslation, z.ring, z.P,
      [P = z.P, B = z.B](int tau, const Elem& x) {
        return P->make_pair(P->first(x), B->translate(tau, P->second(x)));
      },
      /*unital=*/true, /*tensor_compatible=*/true);
  return z;
}

// Expected coordinate shift of the dual generator, written out directly so the
// frozen check does not reuse the carrier's own translation code.
Elem shifted_by_one(const FnCuPtr& B, const Elem& g) {
  const auto& v = B->values(g);
  const int n = static_cast<int>(v.size());
  std::vector<Elem> out(v.size());
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = v[static_cast<size_t>((i + 1) % n)];
  return B->make_fn(std::move(out));
}

GalleryEntry make_pullback_entry(int n, bool uhf_flavor) {
  PullbackBundle z = build_pullback(n, uhf_flavor);

  GalleryEntry e;
  e.name = (uhf_flavor ? std::string("pullback-uhf:") : std::string("pullback-w:")) +
           std::to_string(n);
  e.summary = std::string("fiber product of evaluation at 0 on invariant step functions ") +
              "against the summed " + z.B->name() + " leg, carrying the dual action of cyclic:" +
              std::to_string(n);
  e.carriers = {z.P};
  e.module = z.mod;
  e.morphisms = z.sum_leg ? std::vector<MorphismPtr>{z.phi, z.psi, z.sum_leg}
                          : std::vector<MorphismPtr>{z.phi, z.psi};
  e.verify = [z, n, uhf_flavor, name = e.name](const CheckOptions& o) {
    std::vector<Report> out;
    out.push_back(check_axioms(z.P, o));
    out.push_back(check_semimodule(z.mod, o));
    out.push_back(check_morphism(z.phi, o));
    out.push_back(check_morphism(z.psi, o));
    if (z.sum_leg) out.push_back(check_morphism(z.sum_leg, o));

    Report fr = frozen_report(name);
    const auto& B = z.B;
    const auto& P = z.P;
    auto base = B->base();

    // Landmark pair: a constant function against the unit mass at index 0.
    Elem unit_pair = P->zero();
    bool unit_ok = true;
    std::string unit_err;
    try {
      Elem fconst, g;
      if (uhf_flavor) {
        auto U = UhfCu::instance(n);
        fconst = z.A->wrap(z.S->constant(U->compact(Rational(1))));
        std::vector<Elem> gv(static_cast<size_t>(n), base->zero());
        gv[0] = base->parse("nat:1");
        g = B->make_fn(std::move(gv));
      } else {
        auto rat = std::static_pointer_cast<const RatCu>(base);
        fconst = z.A->wrap(z.S->constant(rat->make(ExtRat(Rational(3, 2)))));
        std::vector<Elem> gv(static_cast<size_t>(n), rat->make(ExtRat(Rational(0))));
        if (n >= 2) {
          gv[0] = rat->make(ExtRat(Rational(1)));
          gv[1] = rat->make(ExtRat(Rational(1, 2)));
        } else {
          gv[0] = rat->make(ExtRat(Rational(3, 2)));
        }
        g = B->make_fn(std::move(gv));
      }
      unit_pair = P->make_pair(fconst, g);
    } catch (const DomainError& ex) {
      unit_ok = false;
      unit_err = ex.what();
    }
    row(fr, "LANDMARK_PAIR_VALID", unit_ok, unit_err);
    if (unit_ok) fr.keys.push_back({"landmark-pair", P->format(unit_pair)});

    if (unit_ok) {
      const int t1 = n > 1 ? 1 : 0;
      const Elem acted = z.mod->act(z.ring->irrep(t1), unit_pair);
      const Elem expected =
          n > 1 ? P->make_pair(P->first(unit_pair), shifted_by_one(B, P->second(unit_pair)))
                : unit_pair;
      row(fr, "DUAL_GENERATOR_SHIFTS", P->equal(acted, expected), P->format(acted));
      fr.keys.push_back({"dual-shift", P->format(acted)});

      Elem cycle = unit_pair;
      for (int i = 0; i < n; ++i) cycle = z.mod->act(z.ring->irrep(t1), cycle);
      bool order_ok = P->equal(cycle, unit_pair);
      if (n >= 2) order_ok = order_ok && !P->equal(acted, unit_pair);
      row(fr, "DUAL_ACTION_ORDER", order_ok, P->format(cycle));
    }

    bool inf_ok = true;
    std::string inf_err;
    try {
      Elem ftop, gtop;
      if (uhf_flavor) {
        auto U = UhfCu::instance(n);
        ftop = z.A->wrap(z.S->constant(U->soft(ExtRat::infinity())));
        std::vector<Elem> gv(static_cast<size_t>(n), base->parse("nat:inf"));
        gtop = B->make_fn(std::move(gv));
      } else {
        auto rat = std::static_pointer_cast<const RatCu>(base);
        ftop = z.A->wrap(z.S->constant(rat->make(ExtRat::infinity())));
        std::vector<Elem> gv(static_cast<size_t>(n), rat->make(ExtRat::infinity()));
        gtop = B->make_fn(std::move(gv));
      }
      Elem top = P->make_pair(ftop, gtop);
      fr.keys.push_back({"full-pair", P->format(top)});
    } catch (const DomainError& ex) {
      inf_ok = false;
      inf_err = ex.what();
    }
    row(fr, "FULL_PAIR_VALID", inf_ok, inf_err);
    row(fr, "ZERO_VALID", P->equal(P->zero(), P->make_pair(z.A->zero(), B->zero())),
        P->format(P->zero()));
    out.push_back(std::move(fr));
    return out;
  };
  return e;
}

// ---- the pair of carriers distinguished by counting atoms -------------------

GalleryEntry make_nonstable_entry() {
  auto L = NatCu::instance();
  auto R = FnCu::make(NatCu::instance(), 4, {4});

  GalleryEntry e;
  e.name = "nonstable";
  e.summary = "extended naturals against rank-4 tuples: atom counts 1 and 4 rule out "
              "an order isomorphism";
  e.carriers = {L, SemigroupPtr(R)};
  e.verify = [L, R, name = e.name](const CheckOptions& o) {
    std::vector<Report> out;
    out.push_back(check_axioms(L, o));
    out.push_back(check_axioms(R, o));

    Report fr = frozen_report(name);
    auto la = L->atoms();
    auto ra = R->atoms();
    const bool left_ok = la && !la->none && la->count == ExtNat(1);
    const bool right_ok = ra && !ra->none && ra->count == ExtNat(4);
    row(fr, "ATOM_COUNT_LEFT", left_ok, la ? la->count.str() : "unavailable");
    row(fr, "ATOM_COUNT_RIGHT", right_ok, ra ? ra->count.str() : "unavailable");
    row(fr, "NOT_ISOMORPHIC", left_ok && right_ok && !(la->count == ra->count),
        "atom counts fail to separate the carriers");
    fr.keys.push_back({"atoms-left", la ? la->count.str() : "unavailable"});
    fr.keys.push_back({"atoms-right", ra ? ra->count.str() : "unavailable"});
    fr.keys.push_back({"separating-invariant", "atom-count"});
    out.push_back(std::move(fr));
    return out;
  };
  return e;
}

}  // namespace

GalleryEntry gallery_entry(const std::string& name) {
  if (name == "w") return make_w_entry();
  if (name == "nonstable") return make_nonstable_entry();
  if (name.rfind("uhf:", 0) == 0) return make_uhf_entry(family_index(name, 4, 2));
  if (name.rfind("uhf-circle:", 0) == 0)
    return make_circle_entry(family_index(name, 11, 2), /*uhf_flavor=*/true);
  if (name.rfind("w-circle:", 0) == 0)
    return make_circle_entry(family_index(name, 9, 1), /*uhf_flavor=*/false);
  if (name.rfind("pullback-uhf:", 0) == 0)
    return make_pullback_entry(family_index(name, 13, 2), /*uhf_flavor=*/true);
  if (name.rfind("pullback-w:", 0) == 0)
    return make_pullback_entry(family_index(name, 11, 1), /*uhf_flavor=*/false);
  throw DomainError("unknown example '" + name + "'");
}

std::vector<std::string> gallery_families() {
  return {"uhf:<m>",          "uhf-circle:<n>", "w",        "w-circle:<n>",
          "pullback-uhf:<n>", "pullback-w:<n>", "nonstable"};
}

}  // namespace cucalc
