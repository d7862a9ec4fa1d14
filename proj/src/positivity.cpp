#include "alf/positivity.hpp"

#include "alf/error.hpp"

namespace alf {

MoriGenerators mori_generators(const SurfaceModel& surface, const CurveCatalog& catalog) {
  MoriGenerators out;
  out.complete = catalog.mori_complete();
  const auto candidates = distinct_class_records(surface, catalog);
  const auto nef_rays = tracked_nef_rays(surface, catalog);
  const std::size_t d = surface.rank();
  for (std::size_t idx : candidates) {
    const auto& rec = catalog.records()[idx];
    if (nef_rays) {
      // g spans an extreme ray of K iff the facets of K through g have rank d-1.
      cone::Matrix tight;
      for (const auto& r : *nef_rays)
        if (sgn(surface.intersect(r, rec.klass)) == 0) tight.emplace_back(r.coefficients().begin(), r.coefficients().end());
      if (d > 1 && cone::rank(tight, d) < d - 1) continue;
    }
    out.generators.push_back({rec.klass, rec.id});
  }
  return out;
}

namespace {

PositivityVerdict positivity(const SurfaceModel& surface, const CurveCatalog& catalog, const DivisorClass& d,
                             bool strict) {
  if (d.size() != surface.rank())
    throw DimensionMismatch("class of length " + std::to_string(d.size()) + " on a surface of rank " +
                            std::to_string(surface.rank()));
  PositivityVerdict v;
  v.holds_on_tracked = true;
  for (const auto& g : mori_generators(surface, catalog).generators) {
    const int s = sgn(surface.intersect(d, g.klass));
    if (s < 0 || (strict && s == 0)) {
      v.holds_on_tracked = false;
      v.violated_by = g.curve;
      break;
    }
  }
  if (!v.holds_on_tracked)
    v.value = Truth::False;
  else
    v.value = catalog.mori_complete() ? Truth::True : Truth::Unknown;
  return v;
}

}  // namespace

PositivityVerdict is_ample(const SurfaceModel& surface, const CurveCatalog& catalog, const DivisorClass& d) {
  return positivity(surface, catalog, d, true);
}

PositivityVerdict is_nef(const SurfaceModel& surface, const CurveCatalog& catalog, const DivisorClass& d) {
  return positivity(surface, catalog, d, false);
}

std::vector<CurveRecord> negative_curves(const SurfaceModel& surface, const CurveCatalog& catalog) {
  (void)surface;
  std::vector<CurveRecord> out;
  for (const auto& rec : catalog.records())
    if (sgn(rec.self_int) < 0) out.push_back(rec);
  return out;
}

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    case Truth::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace alf
