#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alf/picard.hpp"

namespace alf {

struct MoriGenerator {
  DivisorClass klass;
  std::string curve;  // catalog id of the tracked curve realising this ray
};

/// Extreme rays of the cone spanned by the tracked curves. When `complete`
/// is set they generate the Mori cone, so a class is ample iff it is strictly
/// positive on every generator (Kleiman).
struct MoriGenerators {
  std::vector<MoriGenerator> generators;
  bool complete = false;
};

MoriGenerators mori_generators(const SurfaceModel& surface, const CurveCatalog& catalog);

enum class Truth { True, False, Unknown };

/// Outcome of an ampleness or nefness query. A violated tracked curve is a
/// certain False; positivity on every tracked curve is only a certain True
/// when the Mori data is complete, otherwise it degrades to Unknown.
struct PositivityVerdict {
  Truth value = Truth::Unknown;
  bool holds_on_tracked = false;
  std::optional<std::string> violated_by;

  bool certain() const { return value != Truth::Unknown; }
};

PositivityVerdict is_ample(const SurfaceModel& surface, const CurveCatalog& catalog, const DivisorClass& d);
PositivityVerdict is_nef(const SurfaceModel& surface, const CurveCatalog& catalog, const DivisorClass& d);

/// Catalog records with negative self-intersection, in catalog order.
std::vector<CurveRecord> negative_curves(const SurfaceModel& surface, const CurveCatalog& catalog);

const char* to_string(Truth t);

}  // namespace alf
