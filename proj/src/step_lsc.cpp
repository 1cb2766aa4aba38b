#include "cucalc/step_lsc.hpp"

#include <algorithm>

#include "cucalc/errors.hpp"
#include "cucalc/parse_util.hpp"

namespace cucalc {

StepLscCu::StepLscCu(SemigroupPtr base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("step carrier: null base");
  if (!base_->meet(base_->zero(), base_->zero()))
    throw PreconditionError("step carrier: base must provide binary minima");
  set_name("step:" + base_->name());
}

std::shared_ptr<const StepLscCu> StepLscCu::make(SemigroupPtr base) {
  return std::make_shared<StepLscCu>(std::move(base));
}

Elem StepLscCu::base_meet(const Elem& a, const Elem& b) const {
  auto m = base_->meet(a, b);
  if (!m) throw DomainError("step carrier: base minimum unavailable");
  return *m;
}

Elem StepLscCu::base_join(const Elem& a, const Elem& b) const {
  // Bases here are totally ordered, so the join is just the larger element.
  return base_->leq(a, b) ? b : a;
}

void StepLscCu::validate(const StepVal& v) const {
  const std::size_t m = v.breaks.size();
  if (v.arcs.size() != (m == 0 ? 1 : m) || v.pts.size() != m)
    throw PreconditionError("step function: mismatched component counts");
  for (const Elem& a : v.arcs) base_->check_owner(a);
  for (const Elem& p : v.pts) base_->check_owner(p);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(Rational(0) <= v.breaks[i] && v.breaks[i] < Rational(1)))
      throw PreconditionError("step function: breakpoint outside [0,1)");
    if (i + 1 < m && !(v.breaks[i] < v.breaks[i + 1]))
      throw PreconditionError("step function: breakpoints not strictly increasing");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Elem& left = v.arcs[(i + m - 1) % m];
    if (!base_->leq(v.pts[i], left) || !base_->leq(v.pts[i], v.arcs[i]))
      throw PreconditionError("step function: point value above an adjacent arc (not lsc)");
  }
}

StepVal StepLscCu::canon(StepVal v) const {
  bool changed = true;
  while (changed && !v.breaks.empty()) {
    changed = false;
    const std::size_t m = v.breaks.size();
    if (m == 1) {
      if (base_->equal(v.pts[0], v.arcs[0])) {
        v = StepVal{{}, {v.arcs[0]}, {}};
      }
      break;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t prev = (i + m - 1) % m;
      if (base_->equal(v.pts[i], v.arcs[prev]) && base_->equal(v.arcs[prev], v.arcs[i])) {
        v.breaks.erase(v.breaks.begin() + (long)i);
        v.pts.erase(v.pts.begin() + (long)i);
        v.arcs.erase(v.arcs.begin() + (long)i);
        changed = true;
        break;
      }
    }
  }
  return v;
}

Elem StepLscCu::constant(const Elem& value) const {
  base_->check_owner(value);
  return Elem(self(), Payload(StepVal{{}, {value}, {}}));
}

Elem StepLscCu::make_step(std::vector<Rational> breaks, std::vector<Elem> arcs,
                          std::vector<Elem> pts) const {
  StepVal v{std::move(breaks), std::move(arcs), std::move(pts)};
  validate(v);
  return finish(std::move(v));
}

StepVal StepLscCu::refine(const StepVal& v, const std::vector<Rational>& extra) const {
  std::vector<Rational> add;
  for (const Rational& x : extra) {
    Rational r = x.mod1();
    if (!std::binary_search(v.breaks.begin(), v.breaks.end(), r)) add.push_back(r);
  }
  std::sort(add.begin(), add.end());
  add.erase(std::unique(add.begin(), add.end()), add.end());
  if (add.empty()) return v;

  if (v.breaks.empty()) {
    StepVal out;
    out.breaks = add;
    out.arcs.assign(add.size(), v.arcs[0]);
    out.pts.assign(add.size(), v.arcs[0]);
    return out;
  }

  const std::size_t m = v.breaks.size();
  auto arc_of = [&](const Rational& x) -> std::size_t {
    // Arc i covers (breaks[i], breaks[i+1]) cyclically; x below breaks[0]
    // falls in the wrap-around arc m-1.
    auto it = std::upper_bound(v.breaks.begin(), v.breaks.end(), x);
    if (it == v.breaks.begin()) return m - 1;
    return (std::size_t)(it - v.breaks.begin()) - 1;
  };

  StepVal out;
  std::size_t ia = 0, ib = 0;
  while (ia < m || ib < add.size()) {
    if (ib == add.size() || (ia < m && v.breaks[ia] < add[ib])) {
      out.breaks.push_back(v.breaks[ia]);
      out.pts.push_back(v.pts[ia]);
      out.arcs.push_back(v.arcs[ia]);  // placeholder; fixed below
      ++ia;
    } else {
      const std::size_t host = arc_of(add[ib]);
      out.breaks.push_back(add[ib]);
      out.pts.push_back(v.arcs[host]);
      out.arcs.push_back(v.arcs[host]);
      ++ib;
    }
  }
  // Arc i of the refinement inherits the value of the original arc containing
  // its interior; recompute from arc_of on a midpoint-free rule: the segment
  // (out.breaks[i], next) lies inside the original arc containing the point
  // just after out.breaks[i], which is arc_of applied to out.breaks[i] when
  // out.breaks[i] is not an original breakpoint, and the arc starting there
  // otherwise.
  const std::size_t mm = out.breaks.size();
  for (std::size_t i = 0; i < mm; ++i) {
    const Rational& b = out.breaks[i];
    auto it = std::lower_bound(v.breaks.begin(), v.breaks.end(), b);
    const bool original = it != v.breaks.end() && *it == b;
    out.arcs[i] = v.arcs[original ? (std::size_t)(it - v.breaks.begin()) : arc_of(b)];
  }
  return out;
}

std::pair<StepVal, StepVal> StepLscCu::common_refine(const StepVal& a, const StepVal& b) const {
  return {refine(a, b.breaks), refine(b, a.breaks)};
}

Elem StepLscCu::eval(const Elem& f, const Rational& x) const {
  check_owner(f);
  const StepVal& v = val(f);
  if (v.breaks.empty()) return v.arcs[0];
  Rational r = x.mod1();
  auto it = std::lower_bound(v.breaks.begin(), v.breaks.end(), r);
  if (it != v.breaks.end() && *it == r) return v.pts[(std::size_t)(it - v.breaks.begin())];
  if (it == v.breaks.begin()) return v.arcs[v.breaks.size() - 1];
  return v.arcs[(std::size_t)(it - v.breaks.begin()) - 1];
}

Elem StepLscCu::rotate(const Elem& f, const Rational& r) const {
  check_owner(f);
  const StepVal& v = val(f);
  if (v.breaks.empty()) return f;
  const std::size_t m = v.breaks.size();
  std::vector<std::size_t> idx(m);
  std::vector<Rational> shifted(m);
  for (std::size_t i = 0; i < m; ++i) {
    shifted[i] = (v.breaks[i] - r).mod1();
    idx[i] = i;
  }
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return shifted[i] < shifted[j]; });
  StepVal out;
  for (std::size_t i : idx) {
    out.breaks.push_back(shifted[i]);
    out.arcs.push_back(v.arcs[i]);
    out.pts.push_back(v.pts[i]);
  }
  return finish(std::move(out));
}

Elem StepLscCu::force_value_at(const Elem& f, const std::vector<Rational>& points,
                               const Elem& value) const {
  check_owner(f);
  base_->check_owner(value);
  StepVal v = refine(val(f), points);
  const std::size_t m = v.breaks.size();
  for (const Rational& p : points) {
    Rational r = p.mod1();
    auto it = std::lower_bound(v.breaks.begin(), v.breaks.end(), r);
    const std::size_t i = (std::size_t)(it - v.breaks.begin());
    v.pts[i] = value;
    v.arcs[i] = base_join(v.arcs[i], value);
    v.arcs[(i + m - 1) % m] = base_join(v.arcs[(i + m - 1) % m], value);
  }
  validate(v);
  return finish(std::move(v));
}

Elem StepLscCu::add_impl(const Elem& x, const Elem& y) const {
  auto [a, b] = common_refine(val(x), val(y));
  StepVal out;
  out.breaks = a.breaks;
  for (std::size_t i = 0; i < a.arcs.size(); ++i) out.arcs.push_back(base_->add(a.arcs[i], b.arcs[i]));
  for (std::size_t i = 0; i < a.pts.size(); ++i) out.pts.push_back(base_->add(a.pts[i], b.pts[i]));
  return finish(std::move(out));
}

bool StepLscCu::leq_impl(const Elem& x, const Elem& y) const {
  auto [a, b] = common_refine(val(x), val(y));
  for (std::size_t i = 0; i < a.arcs.size(); ++i)
    if (!base_->leq(a.arcs[i], b.arcs[i])) return false;
  for (std::size_t i = 0; i < a.pts.size(); ++i)
    if (!base_->leq(a.pts[i], b.pts[i])) return false;
  return true;
}

bool StepLscCu::wb_impl(const Elem& x, const Elem& y) const {
  auto [a, b] = common_refine(val(x), val(y));
  const std::size_t m = a.breaks.size();
  if (m == 0) return base_->way_below(a.arcs[0], b.arcs[0]);
  for (std::size_t i = 0; i < m; ++i) {
    // Minimum of y over the closed arc [breaks[i], breaks[i+1]].
    Elem closed = base_meet(b.pts[i], base_meet(b.arcs[i], b.pts[(i + 1) % m]));
    if (!base_->way_below(a.arcs[i], closed)) return false;
    if (!base_->way_below(a.pts[i], b.pts[i])) return false;
  }
  return true;
}

std::optional<Elem> StepLscCu::meet(const Elem& x, const Elem& y) const {
  check_owner(x);
  check_owner(y);
  auto [a, b] = common_refine(val(x), val(y));
  StepVal out;
  out.breaks = a.breaks;
  for (std::size_t i = 0; i < a.arcs.size(); ++i) out.arcs.push_back(base_meet(a.arcs[i], b.arcs[i]));
  for (std::size_t i = 0; i < a.pts.size(); ++i) out.pts.push_back(base_meet(a.pts[i], b.pts[i]));
  return finish(std::move(out));
}

Rational StepLscCu::min_gap(const std::vector<Rational>& breaks) const {
  const std::size_t m = breaks.size();
  Rational best = Rational(1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational gap = (i + 1 < m) ? breaks[i + 1] - breaks[i] : breaks[0] + Rational(1) - breaks[m - 1];
    if (gap < best) best = gap;
  }
  return best;
}

StepVal StepLscCu::value_approx(const StepVal& v, int k) const {
  StepVal out;
  out.breaks = v.breaks;
  for (const Elem& a : v.arcs) out.arcs.push_back(base_->approximant(a, k));
  const std::size_t m = v.breaks.size();
  for (std::size_t i = 0; i < m; ++i) {
    // Repair so the approximated point stays below both approximated arcs.
    Elem p = base_->approximant(v.pts[i], k);
    p = base_meet(p, base_meet(out.arcs[(i + m - 1) % m], out.arcs[i]));
    out.pts.push_back(p);
  }
  return out;
}

StepVal StepLscCu::erode(const StepVal& v, const Rational& delta) const {
  // Shrink every high arc away from its endpoints: on (b_i - delta, b_i + delta)
  // the eroded function takes the point value p_i. Requires 2*delta < min gap.
  const std::size_t m = v.breaks.size();
  if (m == 0) return v;
  if (!(delta + delta < min_gap(v.breaks)))
    throw PreconditionError("step function: erosion radius too large");
  struct Entry {
    Rational at;
    Elem arc;  // value on the arc starting at `at`
    Elem pt;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < m; ++i) {
    const Elem& plateau = v.pts[i];
    entries.push_back({(v.breaks[i] - delta).mod1(), plateau, plateau});
    entries.push_back({(v.breaks[i] + delta).mod1(), v.arcs[i], plateau});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.at < b.at; });
  StepVal out;
  for (const Entry& e : entries) {
    out.breaks.push_back(e.at);
    out.arcs.push_back(e.arc);
    out.pts.push_back(e.pt);
  }
  return out;
}

StepVal StepLscCu::approx_core(const StepVal& v, int k) const {
  if (v.breaks.empty()) {
    return StepVal{{}, {base_->approximant(v.arcs[0], k)}, {}};
  }
  Rational delta = min_gap(v.breaks) / Rational(k + 3);
  return erode(value_approx(v, k), delta);
}

Elem StepLscCu::approximant_impl(const Elem& x, int k) const {
  return finish(approx_core(val(x), k));
}

Elem StepLscCu::anchored_approximant(const Elem& f, int k,
                                     const std::vector<Rational>& anchors) const {
  check_owner(f);
  if (anchors.empty()) return approximant(f, k);
  return finish(approx_core(refine(val(f), anchors), k));
}

Elem StepLscCu::pinned_approximant(const Elem& f, const std::vector<Rational>& anchors,
                                   const std::function<Elem(int)>& target_chain, int k) const {
  check_owner(f);
  if (anchors.empty()) return approximant(f, k);
  const StepVal refined = refine(val(f), anchors);
  const Rational gap = min_gap(refined.breaks);

  std::vector<Rational> anchor_pts;
  for (const Rational& a : anchors) anchor_pts.push_back(a.mod1());
  std::sort(anchor_pts.begin(), anchor_pts.end());
  anchor_pts.erase(std::unique(anchor_pts.begin(), anchor_pts.end()), anchor_pts.end());

  // Neighbourhood data of each anchor in the refined picture: the anchor's own
  // value and both adjacent arc values.
  std::vector<Elem> guard;
  const std::size_t m = refined.breaks.size();
  for (const Rational& a : anchor_pts) {
    auto it = std::lower_bound(refined.breaks.begin(), refined.breaks.end(), a);
    const std::size_t i = (std::size_t)(it - refined.breaks.begin());
    guard.push_back(refined.pts[i]);
    guard.push_back(refined.arcs[i]);
    guard.push_back(refined.arcs[(i + m - 1) % m]);
  }

  // Adaptive index: the k-th pinned term erodes at the smallest index chain
  // j_0 < j_1 < ... < j_k whose value approximations dominate the pin values.
  auto admits = [&](const Elem& pin, int j) {
    for (const Elem& g : guard)
      if (!base_->leq(pin, base_->approximant(g, j))) return false;
    return true;
  };
  // Pins may grow linearly with the chain index (sums of truncated infinite
  // coordinates), so the admissible erosion index can too; the cap only stops
  // genuinely inadmissible pins.
  constexpr int kSearchCap = 1 << 18;
  int j = -1;
  Elem pin;
  for (int i = 0; i <= k; ++i) {
    pin = target_chain(i);
    base_->check_owner(pin);
    int next = j + 1;
    while (next <= kSearchCap && !admits(pin, next)) ++next;
    if (next > kSearchCap)
      throw DomainError("pinned approximant: no admissible erosion index (pin not below the limit values)");
    j = next;
  }

  StepVal body = approx_core(refined, j);
  const Rational rho = gap / Rational(2 * (j + 3));  // half the erosion radius

  // Overwrite a shrinking plateau around every anchor with the exact pin value.
  std::vector<Rational> patch_breaks;
  for (const Rational& a : anchor_pts) {
    patch_breaks.push_back((a - rho).mod1());
    patch_breaks.push_back(a);
    patch_breaks.push_back((a + rho).mod1());
  }
  StepVal patched = refine(body, patch_breaks);
  const std::size_t mm = patched.breaks.size();
  auto index_of = [&](const Rational& b) {
    auto it = std::lower_bound(patched.breaks.begin(), patched.breaks.end(), b);
    return (std::size_t)(it - patched.breaks.begin());
  };
  for (const Rational& a : anchor_pts) {
    const std::size_t lo = index_of((a - rho).mod1());
    const std::size_t mid = index_of(a);
    const std::size_t hi = index_of((a + rho).mod1());
    patched.pts[mid] = pin;
    patched.pts[lo] = base_meet(pin, patched.arcs[(lo + mm - 1) % mm]);
    patched.pts[hi] = base_meet(pin, patched.arcs[hi]);
    for (std::size_t i = lo; i != hi; i = (i + 1) % mm) {
      patched.arcs[i] = pin;
      if (i != lo && i != mid) patched.pts[i] = pin;
    }
  }
  validate(patched);
  return finish(std::move(patched));
}

Chain StepLscCu::value_approximant_family(const Elem& f) const {
  check_owner(f);
  StepVal v = val(f);
  auto self_ptr = std::static_pointer_cast<const StepLscCu>(self());
  return Chain::registered(
      [self_ptr, v](int k) { return self_ptr->finish(self_ptr->value_approx(v, k)); }, f);
}

Elem StepLscCu::inf_scale_impl(const Elem& x) const {
  const StepVal& v = val(x);
  StepVal out;
  out.breaks = v.breaks;
  for (const Elem& a : v.arcs) out.arcs.push_back(base_->nat_scale(ExtNat::infinity(), a));
  for (const Elem& p : v.pts) out.pts.push_back(base_->nat_scale(ExtNat::infinity(), p));
  return finish(std::move(out));
}

std::optional<Elem> StepLscCu::non_compact_witness() const {
  auto w = base_->non_compact_witness();
  if (!w) return std::nullopt;
  return constant(*w);
}

Elem StepLscCu::sample(Rng& rng) const {
  static const Rational kGrid[] = {
      Rational(0),      Rational(1, 8), Rational(1, 6), Rational(1, 4), Rational(1, 3),
      Rational(3, 8),   Rational(1, 2), Rational(5, 8), Rational(2, 3), Rational(3, 4),
      Rational(5, 6),   Rational(7, 8)};
  const std::size_t m = rng.below(4);
  if (m == 0) return constant(base_->sample(rng));
  std::vector<Rational> breaks;
  while (breaks.size() < m) {
    Rational b = kGrid[rng.below(sizeof(kGrid) / sizeof(kGrid[0]))];
    if (std::find(breaks.begin(), breaks.end(), b) == breaks.end()) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<Elem> arcs;
  for (std::size_t i = 0; i < m; ++i) arcs.push_back(base_->sample(rng));
  std::vector<Elem> pts;
  for (std::size_t i = 0; i < m; ++i) {
    Elem p = base_->sample(rng);
    p = base_meet(p, base_meet(arcs[(i + m - 1) % m], arcs[i]));
    pts.push_back(p);
  }
  return make_step(std::move(breaks), std::move(arcs), std::move(pts));
}

std::string StepLscCu::format(const Elem& f) const {
  check_owner(f);
  const StepVal& v = val(f);
  std::string out = "step{b=";
  for (std::size_t i = 0; i < v.breaks.size(); ++i) {
    if (i) out += ",";
    out += v.breaks[i].str();
  }
  out += "; arcs=";
  for (std::size_t i = 0; i < v.arcs.size(); ++i) {
    if (i) out += ",";
    out += base_->format(v.arcs[i]);
  }
  out += "; pts=";
  for (std::size_t i = 0; i < v.pts.size(); ++i) {
    if (i) out += ",";
    out += base_->format(v.pts[i]);
  }
  out += "}";
  return out;
}

Elem StepLscCu::parse(std::string_view text) const {
  using namespace parse_util;
  std::string_view s = trim(text);
  if (!consume_prefix(s, "step{") || s.empty() || s.back() != '}')
    throw ParseError("step literal: expected step{b=...; arcs=...; pts=...}");
  s.remove_suffix(1);
  auto sections = split_top(s, ';');
  if (sections.size() != 3) throw ParseError("step literal: expected three ';'-separated sections");
  auto section = [&](std::size_t i, std::string_view key) {
    std::string_view t = trim(sections[i]);
    if (!consume_prefix(t, key) || !consume_prefix(t, "="))
      throw ParseError("step literal: expected section " + std::string(key) + "=");
    return trim(t);
  };
  std::string_view bs = section(0, "b");
  std::string_view as = section(1, "arcs");
  std::string_view ps = section(2, "pts");

  std::vector<Rational> breaks;
  if (!bs.empty())
    for (std::string_view tok : split_top(bs, ',')) breaks.push_back(parse_rational(trim(tok)));
  std::vector<Elem> arcs;
  if (!as.empty())
    for (std::string_view tok : split_top(as, ',')) arcs.push_back(base_->parse(trim(tok)));
  std::vector<Elem> pts;
  if (!ps.empty())
    for (std::string_view tok : split_top(ps, ',')) pts.push_back(base_->parse(trim(tok)));

  StepVal v{std::move(breaks), std::move(arcs), std::move(pts)};
  try {
    validate(v);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("step literal: ") + e.what());
  }
  return finish(std::move(v));
}

}  // namespace cucalc
