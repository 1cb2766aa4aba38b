#pragma once

#include "cucalc/semigroup.hpp"

namespace cucalc {

struct ResolveOptions {
  std::string group_table_path;  // for cug:table
  std::string char_table_path;
};

// Carrier names accepted on the command line:
//   nat | rat | uhf<n> | cug:<gspec> | step:<base> | fn:<base>:<k>
//   | example:<gallery name>
// Group specs: cyclic:<n>, product:<a>,<b>,..., s3, d4, q8, table.
// Unrecognized specs raise ParseError; structurally impossible combinations
// (for instance a step base without meets) raise DomainError.
SemigroupPtr resolve_semigroup(const std::string& spec, const ResolveOptions& opts = {});

}  // namespace cucalc
