#include "cucalc/axioms.hpp"

#include <algorithm>
#include <map>

namespace cucalc {

namespace {

// Geometrically growing probe indices; sound for increasing chains.
std::vector<int> probe_schedule(const OracleParams& p) {
  std::vector<int> ks;
  for (int k = 0; k <= 8 && k <= p.k_max; ++k) ks.push_back(k);
  for (int k = 12; k < p.k_max; k += k / 2) ks.push_back(k);
  if (ks.empty() || ks.back() != p.k_max) ks.push_back(p.k_max);
  return ks;
}

// Collects per-axiom outcomes in a fixed order, keeping the first
// counterexample and skipping further work for laws already failed.
class Tally {
 public:
  explicit Tally(const std::vector<std::string>& order) {
    for (const auto& n : order) {
      index_[n] = results_.size();
      results_.push_back(AxiomResult{n, true, ""});
    }
  }

  bool active(const std::string& name) const { return results_[index_.at(name)].pass; }

  void fail(const std::string& name, std::string detail) {
    AxiomResult& r = results_[index_.at(name)];
    if (r.pass) {
      r.pass = false;
      r.detail = std::move(detail);
    }
  }

  void require(const std::string& name, bool ok, const std::function<std::string()>& detail) {
    if (!ok) fail(name, detail());
  }

  std::vector<AxiomResult> take() { return std::move(results_); }

 private:
  std::vector<AxiomResult> results_;
  std::map<std::string, std::size_t> index_;
};

std::string kind_label(ActionKind k) {
  switch (k) {
    case ActionKind::Trivial: return "trivial";
    case ActionKind::DualTranslation: return "dual-translation";
    case ActionKind::TensorScaling: return "scaling";
    case ActionKind::Custom: return "custom";
  }
  return "custom";
}

}  // namespace

bool Report::pass() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

std::string Report::structured() const {
  std::string out;
  out += "SUITE " + suite + "\n";
  out += "SEED " + std::to_string(seed) + "\n";
  out += "SAMPLES " + std::to_string(samples) + "\n";
  for (const auto& [k, v] : keys) out += "KEY " + k + " " + v + "\n";
  for (const auto& a : axioms) {
    out += "AXIOM " + a.name + (a.pass ? " PASS" : " FAIL " + a.detail) + "\n";
  }
  out += std::string("RESULT ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string Report::human() const {
  std::string out;
  out += "verification suite: " + suite + "\n";
  out += "seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples\n";
  for (const auto& [k, v] : keys) out += "  " + k + ": " + v + "\n";
  for (const auto& a : axioms) {
    out += a.pass ? "  [ok]   " : "  [FAIL] ";
    out += a.name;
    if (!a.pass) out += "  " + a.detail;
    out += "\n";
  }
  out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string chain_sup_oracle(const SemigroupPtr& S, const Chain& chain, const Elem& claimed,
                             const OracleParams& p) {
  // Upper bounds: probed terms sit below the claimed supremum and increase.
  Elem prev = chain.term(0);
  for (int k = 0; k < p.upper_terms; ++k) {
    Elem t = k == 0 ? prev : chain.term(k);
    if (k > 0 && !S->leq(prev, t))
      return "terms not increasing at k=" + std::to_string(k - 1) + " term=" + S->format(prev);
    if (!S->leq(t, claimed))
      return "term above claimed sup at k=" + std::to_string(k) + " term=" + S->format(t) +
             " sup=" + S->format(claimed);
    prev = t;
  }
  // Leastness: every canonical approximant of the claimed supremum is caught
  // by some term, so nothing strictly smaller dominates the whole chain.
  const std::vector<int> ks = probe_schedule(p);
  std::map<int, Elem> cache;
  for (int j = 0; j < p.least_levels; ++j) {
    Elem aj = S->approximant(claimed, j);
    bool caught = false;
    for (int k : ks) {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, chain.term(k)).first;
      if (S->leq(aj, it->second)) {
        caught = true;
        break;
      }
    }
    if (!caught)
      return "no term dominates approximant level j=" + std::to_string(j) +
             " approx=" + S->format(aj) + " sup=" + S->format(claimed);
  }
  return "";
}

Report check_axioms(const SemigroupPtr& S, const CheckOptions& opts) {
  static const std::vector<std::string> kOrder = {
      "ORDER_REFL",     "ORDER_ANTISYM", "ORDER_TRANS",  "ADD_ZERO",
      "ADD_COMM",       "ADD_ASSOC",     "ADD_MONOTONE", "WB_ZERO",
      "WB_IMPLIES_LEQ", "WB_TRANSPORT",  "WB_NONCOMPACT_PROBE",
      "O1_RESTRICTED",  "O2",            "O3",           "O4"};
  Report rep;
  rep.suite = S->name();
  rep.seed = opts.seed;
  rep.samples = opts.samples;
  rep.keys.emplace_back("carrier", S->name());
  if (opts.mutate_wb_to_leq) rep.keys.emplace_back("mutate", "wb=leq");

  Tally t(kOrder);
  Rng rng(opts.seed);
  auto wb = [&](const Elem& u, const Elem& v) {
    return opts.mutate_wb_to_leq ? S->leq(u, v) : S->way_below(u, v);
  };
  auto fmt = [&](const char* label, const Elem& e) {
    return std::string(" ") + label + "=" + S->format(e);
  };

  // One-shot probe: a declared non-compact element must not contain itself.
  auto witness = S->non_compact_witness();
  rep.keys.emplace_back("witness", witness ? S->format(*witness) : "none");
  if (witness && wb(*witness, *witness))
    t.fail("WB_NONCOMPACT_PROBE", "witness contains itself" + fmt("w", *witness));

  const Elem zero = S->zero();
  for (int i = 0; i < opts.samples; ++i) {
    Elem x = S->sample(rng);
    Elem y = S->sample(rng);
    Elem z = S->sample(rng);
    Elem xy = S->add(x, y);
    Elem xyz = S->add(xy, z);

    if (t.active("ORDER_REFL") && !S->leq(x, x)) t.fail("ORDER_REFL", fmt("x", x));
    if (t.active("ORDER_ANTISYM") && S->leq(x, y) && S->leq(y, x) && !S->equal(x, y))
      t.fail("ORDER_ANTISYM", fmt("x", x) + fmt("y", y));
    if (t.active("ORDER_TRANS") && S->leq(x, xy) && S->leq(xy, xyz) && !S->leq(x, xyz))
      t.fail("ORDER_TRANS", fmt("x", x) + fmt("y", xy) + fmt("z", xyz));
    if (t.active("ADD_ZERO") && !S->equal(S->add(x, zero), x)) t.fail("ADD_ZERO", fmt("x", x));
    if (t.active("ADD_COMM") && !S->equal(xy, S->add(y, x)))
      t.fail("ADD_COMM", fmt("x", x) + fmt("y", y));
    if (t.active("ADD_ASSOC") && !S->equal(S->add(xy, z), S->add(x, S->add(y, z))))
      t.fail("ADD_ASSOC", fmt("x", x) + fmt("y", y) + fmt("z", z));
    if (t.active("ADD_MONOTONE") && !(S->leq(x, xy) && S->leq(S->add(x, z), S->add(xy, z))))
      t.fail("ADD_MONOTONE", fmt("x", x) + fmt("y", y) + fmt("z", z));
    if (t.active("WB_ZERO") && !wb(zero, x)) t.fail("WB_ZERO", fmt("x", x));

    Elem a2 = S->approximant(x, 2);
    Elem a3 = S->approximant(x, 3);
    Elem a4 = S->approximant(x, 4);

    if (t.active("WB_IMPLIES_LEQ")) {
      if (wb(a3, a4) && !S->leq(a3, a4))
        t.fail("WB_IMPLIES_LEQ", fmt("x", a3) + fmt("y", a4));
      if (wb(x, y) && !S->leq(x, y)) t.fail("WB_IMPLIES_LEQ", fmt("x", x) + fmt("y", y));
    }
    // w <= a << b <= z forces w << z.
    if (t.active("WB_TRANSPORT") && S->leq(a2, a3) && wb(a3, a4) && S->leq(a4, xy) &&
        !wb(a2, xy))
      t.fail("WB_TRANSPORT", fmt("w", a2) + fmt("x", a3) + fmt("y", a4) + fmt("z", xy));

    if (t.active("O2")) {
      static const int kLevels[] = {0, 1, 2, 5};
      for (int k : kLevels) {
        Elem ak = S->approximant(x, k);
        Elem ak1 = S->approximant(x, k + 1);
        if (!wb(ak, ak1) || !S->leq(ak, x)) {
          t.fail("O2", fmt("x", x) + " k=" + std::to_string(k) + fmt("approx", ak) +
                           fmt("next", ak1));
          break;
        }
      }
      if (t.active("O2")) {
        std::string err = chain_sup_oracle(S, Chain::approximants(x), x, opts.oracle);
        if (!err.empty()) t.fail("O2", "approximant family of " + S->format(x) + ": " + err);
      }
    }

    if (t.active("O1_RESTRICTED")) {
      Elem sup = S->sup_list({x, xy, xyz});
      if (!S->equal(sup, xyz)) {
        t.fail("O1_RESTRICTED", "ascending list sup mismatch" + fmt("got", sup));
      } else {
        std::string err = chain_sup_oracle(S, S->canonical_chain(x), x, opts.oracle);
        if (!err.empty())
          t.fail("O1_RESTRICTED", "registered chain of " + S->format(x) + ": " + err);
        else {
          Chain scaled = Chain::scaled(x);
          err = chain_sup_oracle(S, scaled, S->sup_chain(scaled), opts.oracle);
          if (!err.empty())
            t.fail("O1_RESTRICTED", "scaling chain of " + S->format(x) + ": " + err);
        }
      }
    }

    if (t.active("O3")) {
      Chain cx = S->canonical_chain(x);
      Chain image = Chain::unregistered([&S, cx, y](int k) { return S->add(cx.term(k), y); });
      std::string err = chain_sup_oracle(S, image, xy, opts.oracle);
      if (!err.empty())
        t.fail("O3", "translation of the chain of " + S->format(x) + " by " + S->format(y) +
                         ": " + err);
    }

    if (t.active("O4")) {
      Elem b3 = S->approximant(y, 3);
      Elem b4 = S->approximant(y, 4);
      if (wb(a3, a4) && wb(b3, b4) && !wb(S->add(a3, b3), S->add(a4, b4)))
        t.fail("O4", fmt("x", a3) + fmt("y", a4) + fmt("u", b3) + fmt("v", b4));
    }
  }

  rep.axioms = t.take();
  return rep;
}

Report check_morphism(const MorphismPtr& f, const CheckOptions& opts) {
  static const std::vector<std::string> kOrder = {"MORPH_ZERO", "MORPH_ADDITIVE",
                                                  "MORPH_MONOTONE", "MORPH_WB", "MORPH_SUP"};
  const SemigroupPtr& S = f->source();
  const SemigroupPtr& T = f->target();
  Report rep;
  rep.suite = "morphism:" + f->name();
  rep.seed = opts.seed;
  rep.samples = opts.samples;
  rep.keys.emplace_back("source", S->name());
  rep.keys.emplace_back("target", T->name());

  Tally t(kOrder);
  Rng rng(opts.seed);
  auto wbT = [&](const Elem& u, const Elem& v) {
    return opts.mutate_wb_to_leq ? T->leq(u, v) : T->way_below(u, v);
  };

  if (!T->equal((*f)(S->zero()), T->zero())) t.fail("MORPH_ZERO", "image of zero is not zero");

  for (int i = 0; i < opts.samples; ++i) {
    Elem x = S->sample(rng);
    Elem y = S->sample(rng);
    Elem xy = S->add(x, y);
    if (t.active("MORPH_ADDITIVE") && !T->equal((*f)(xy), T->add((*f)(x), (*f)(y))))
      t.fail("MORPH_ADDITIVE", " x=" + S->format(x) + " y=" + S->format(y));
    if (t.active("MORPH_MONOTONE") && !T->leq((*f)(x), (*f)(xy)))
      t.fail("MORPH_MONOTONE", " x=" + S->format(x) + " y=" + S->format(y));
    if (t.active("MORPH_WB")) {
      Elem a3 = S->approximant(x, 3);
      Elem a4 = S->approximant(x, 4);
      if (S->way_below(a3, a4) && !wbT((*f)(a3), (*f)(a4)))
        t.fail("MORPH_WB", " x=" + S->format(a3) + " y=" + S->format(a4));
    }
    if (t.active("MORPH_SUP")) {
      Chain cx = S->canonical_chain(x);
      Chain image = Chain::unregistered([&f, cx](int k) { return (*f)(cx.term(k)); });
      std::string err = chain_sup_oracle(T, image, (*f)(x), opts.oracle);
      if (!err.empty()) t.fail("MORPH_SUP", "image chain of " + S->format(x) + ": " + err);
    }
  }

  rep.axioms = t.take();
  return rep;
}

Report check_semimodule(const SemimodulePtr& M, const CheckOptions& opts) {
  std::vector<std::string> order = {"SM_ZERO",   "SM_DISTRIB_RING", "SM_DISTRIB_CARRIER",
                                    "SM_O2",     "SM_O3",           "SM_O4_LEFT",
                                    "SM_O4_RIGHT"};
  if (M->claims_unital()) order.push_back("SM_UNIT");
  if (M->claims_tensor_compat()) order.push_back("SM_TENSOR");

  const RepSemiringPtr& R = M->ring();
  const SemigroupPtr& C = M->carrier();
  Report rep;
  rep.suite = "semimodule:" + M->name();
  rep.seed = opts.seed;
  rep.samples = opts.samples;
  rep.keys.emplace_back("ring", R->name());
  rep.keys.emplace_back("carrier", C->name());
  rep.keys.emplace_back("action", kind_label(M->kind()));
  rep.keys.emplace_back("claims", std::string(M->claims_unital() ? "unital" : "non-unital") +
                                      "," +
                                      (M->claims_tensor_compat() ? "tensor" : "non-tensor"));

  Tally t(order);
  Rng rng(opts.seed);
  auto wbC = [&](const Elem& u, const Elem& v) {
    return opts.mutate_wb_to_leq ? C->leq(u, v) : C->way_below(u, v);
  };
  auto pairfmt = [&](const Elem& r, const Elem& x) {
    return " r=" + R->format(r) + " x=" + C->format(x);
  };

  for (int i = 0; i < opts.samples; ++i) {
    Elem r = R->sample(rng);
    Elem s = R->sample(rng);
    Elem x = C->sample(rng);
    Elem y = C->sample(rng);

    if (t.active("SM_ZERO") &&
        !(C->equal(M->act(r, C->zero()), C->zero()) && C->equal(M->act(R->zero(), x), C->zero())))
      t.fail("SM_ZERO", pairfmt(r, x));
    if (t.active("SM_DISTRIB_RING") &&
        !C->equal(M->act(R->add(r, s), x), C->add(M->act(r, x), M->act(s, x))))
      t.fail("SM_DISTRIB_RING", pairfmt(r, x) + " s=" + R->format(s));
    if (t.active("SM_DISTRIB_CARRIER") &&
        !C->equal(M->act(r, C->add(x, y)), C->add(M->act(r, x), M->act(r, y))))
      t.fail("SM_DISTRIB_CARRIER", pairfmt(r, x) + " y=" + C->format(y));

    if (t.active("SM_O2")) {
      Chain image =
          Chain::unregistered([&M, &R, r, x](int k) { return M->act(R->approximant(r, k), x); });
      std::string err = chain_sup_oracle(C, image, M->act(r, x), opts.oracle);
      if (!err.empty()) t.fail("SM_O2", pairfmt(r, x) + ": " + err);
    }
    if (t.active("SM_O3")) {
      Chain cx = C->canonical_chain(x);
      Chain image = Chain::unregistered([&M, r, cx](int k) { return M->act(r, cx.term(k)); });
      std::string err = chain_sup_oracle(C, image, M->act(r, x), opts.oracle);
      if (!err.empty()) t.fail("SM_O3", pairfmt(r, x) + ": " + err);
    }

    Elem ra3 = R->approximant(r, 3);
    Elem ra4 = R->approximant(r, 4);
    Elem xa3 = C->approximant(x, 3);
    Elem xa4 = C->approximant(x, 4);
    if (t.active("SM_O4_LEFT") && R->way_below(ra3, ra4) && C->way_below(xa3, x) &&
        !wbC(M->act(ra3, xa3), M->act(ra4, x)))
      t.fail("SM_O4_LEFT", pairfmt(r, x));
    if (t.active("SM_O4_RIGHT") && R->way_below(ra3, r) && C->way_below(xa3, xa4) &&
        !wbC(M->act(ra3, xa3), M->act(r, xa4)))
      t.fail("SM_O4_RIGHT", pairfmt(r, x));

    if (M->claims_unital() && t.active("SM_UNIT") && !C->equal(M->act(R->one(), x), x))
      t.fail("SM_UNIT", " x=" + C->format(x));
    if (M->claims_tensor_compat() && t.active("SM_TENSOR") &&
        !C->equal(M->act(R->tensor(r, s), x), M->act(r, M->act(s, x))))
      t.fail("SM_TENSOR", pairfmt(r, x) + " s=" + R->format(s));
  }

  rep.axioms = t.take();
  return rep;
}

}  // namespace cucalc
