#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alf/picard.hpp"

namespace alf {

/// Integer combination of basis names, kept in basis order without zero
/// terms ("Z" is {{"Z", 1}}).
using ClassSpec = std::vector<std::pair<std::string, long>>;

ClassSpec normalize_class_spec(ClassSpec spec);
DivisorClass resolve_class_spec(const SurfaceModel& surface, const ClassSpec& spec);

struct CurveDeclaration {
  std::string id;
  ClassSpec klass;
  std::size_t step = 0;  // number of blow-ups performed before the curve is declared
  bool operator==(const CurveDeclaration&) const = default;
};

/// Construction recipe for a log pair: base surface, declared curves,
/// blow-ups in order, and the boundary components D_1..D_r (which may name
/// exceptional curves "Ek" and fiber records).
struct PairDescription {
  BaseSurface base;
  std::vector<CurveDeclaration> curves;
  std::vector<BlowUpSpec> blowups;
  std::vector<std::string> boundary;
  bool operator==(const PairDescription&) const = default;
};

class LogPair {
 public:
  const SurfaceModel& surface() const { return surface_; }
  const CurveCatalog& catalog() const { return catalog_; }
  const PairDescription& description() const { return description_; }

  std::size_t size() const { return boundary_.size(); }
  /// Catalog ids of D_1..D_r.
  const std::vector<std::string>& boundary() const { return boundary_; }
  const CurveRecord& component(std::size_t i) const { return catalog_.at(boundary_.at(i)); }
  std::vector<DivisorClass> boundary_classes() const;
  DivisorClass boundary_sum() const;
  bool in_boundary(std::string_view id) const;

  friend LogPair build_pair(const PairDescription& description);

 private:
  LogPair(SurfaceModel surface, CurveCatalog catalog, PairDescription description)
      : surface_(std::move(surface)), catalog_(std::move(catalog)), description_(std::move(description)) {}

  SurfaceModel surface_;
  CurveCatalog catalog_;
  PairDescription description_;
  std::vector<std::string> boundary_;
};

/// Replays a description. Errors carry the location of the offending entry.
LogPair build_pair(const PairDescription& description);

}  // namespace alf
