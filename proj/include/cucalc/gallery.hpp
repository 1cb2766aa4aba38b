#pragma once

#include "cucalc/axioms.hpp"
#include "cucalc/semigroup.hpp"
#include "cucalc/semimodule.hpp"

namespace cucalc {

// A named worked example: one or more carriers, optionally a semimodule
// structure over a representation semiring, the morphisms used to build the
// carriers, and a verification routine combining the generic axiom batteries
// with checks of frozen landmark values.
struct GalleryEntry {
  std::string name;
  std::string summary;
  std::vector<SemigroupPtr> carriers;  // main carrier first
  SemimodulePtr module;                // null when the entry carries no action
  std::vector<MorphismPtr> morphisms;
  std::function<std::vector<Report>(const CheckOptions&)> verify;

  const SemigroupPtr& carrier() const { return carriers.front(); }
};

// Families: uhf:<m>, uhf-circle:<n>, w, w-circle:<n>, pullback-uhf:<n>,
// pullback-w:<n>, nonstable. Throws DomainError for unknown names.
GalleryEntry gallery_entry(const std::string& name);

// One template per family, for help text.
std::vector<std::string> gallery_families();

}  // namespace cucalc
