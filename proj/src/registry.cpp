#include "cucalc/registry.hpp"

#include <cstdlib>

#include "cucalc/base_semigroups.hpp"
#include "cucalc/fn_product.hpp"
#include "cucalc/gallery.hpp"
#include "cucalc/rep_semiring.hpp"
#include "cucalc/step_lsc.hpp"
#include "cucalc/uhf.hpp"

namespace cucalc {

namespace {

long long digits_or_throw(const std::string& s, const std::string& what, long long lo,
                          long long hi) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + " wants a plain integer, got '" + s + "'");
  const long long v = std::strtoll(s.c_str(), nullptr, 10);
  if (v < lo || v > hi)
    throw ParseError(what + " out of range " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

}  // namespace

SemigroupPtr resolve_semigroup(const std::string& spec, const ResolveOptions& opts) {
  if (spec == "nat") return NatCu::instance();
  if (spec == "rat") return RatCu::instance();
  if (spec.rfind("uhf", 0) == 0 && spec.size() > 3 &&
      spec.find_first_not_of("0123456789", 3) == std::string::npos)
    return UhfCu::instance(static_cast<int>(digits_or_throw(spec.substr(3), "uhf base", 2, 10000)));
  if (spec.rfind("cug:", 0) == 0)
    return resolve_rep_semiring(spec.substr(4), opts.group_table_path, opts.char_table_path);
  if (spec.rfind("step:", 0) == 0)
    return StepLscCu::make(resolve_semigroup(spec.substr(5), opts));
  if (spec.rfind("fn:", 0) == 0) {
    const std::size_t cut = spec.rfind(':');
    if (cut <= 3) throw ParseError("fn wants fn:<base>:<k>");
    const int k =
        static_cast<int>(digits_or_throw(spec.substr(cut + 1), "fn index count", 1, 64));
    return FnCu::make(resolve_semigroup(spec.substr(3, cut - 3), opts), k, {k});
  }
  if (spec.rfind("example:", 0) == 0) return gallery_entry(spec.substr(8)).carrier();
  throw ParseError("unknown carrier '" + spec +
                   "' (try nat, rat, uhf<n>, cug:<group>, step:<base>, fn:<base>:<k>, "
                   "example:<name>)");
}

}  // namespace cucalc
