#include "alf/picard.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "alf/error.hpp"

namespace alf {

BaseSurface BaseSurface::hirzebruch(int n) {
  if (n < 0) throw PreconditionError("Hirzebruch index must be non-negative, got " + std::to_string(n));
  return {BaseKind::Hirzebruch, n};
}

DivisorClass DivisorClass::unit(std::size_t rank, std::size_t index) {
  DivisorClass d = zero(rank);
  d[index] = 1;
  return d;
}

static void require_same_size(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("divisor classes of lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " live on different surfaces");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& factor) {
  for (auto& c : coefficients_) c *= factor;
  return *this;
}

// ---------------------------------------------------------------------------
// SurfaceModel

std::vector<std::string> SurfaceModel::basis_names() const {
  std::vector<std::string> names;
  if (base_.kind == BaseKind::ProjectivePlane) {
    names.push_back("H");
  } else {
    names.push_back("Z");
    names.push_back("F");
  }
  for (std::size_t k = 1; k <= blowups_.size(); ++k) names.push_back("E" + std::to_string(k));
  return names;
}

std::optional<std::size_t> SurfaceModel::basis_index(std::string_view name) const {
  const auto names = basis_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

DivisorClass SurfaceModel::named(std::string_view name) const {
  const auto index = basis_index(name);
  if (!index) throw UnknownCurve("no basis class named '" + std::string(name) + "' on this surface");
  return DivisorClass::unit(rank(), *index);
}

DivisorClass SurfaceModel::exceptional(std::size_t k) const {
  if (k == 0 || k > blowups_.size()) throw UnknownCurve("no exceptional class E" + std::to_string(k));
  return DivisorClass::unit(rank(), base_.rank() + k - 1);
}

cone::Matrix SurfaceModel::gram_matrix() const {
  const std::size_t n = rank();
  cone::Matrix g(n, RationalVector(n, 0));
  if (base_.kind == BaseKind::ProjectivePlane) {
    g[0][0] = 1;
  } else {
    g[0][0] = -base_.n;
    g[0][1] = 1;
    g[1][0] = 1;
  }
  for (std::size_t i = base_.rank(); i < n; ++i) g[i][i] = -1;
  return g;
}

void SurfaceModel::require_size(const DivisorClass& d) const {
  if (d.size() != rank())
    throw DimensionMismatch("class of length " + std::to_string(d.size()) + " does not live on a surface of rank " +
                            std::to_string(rank()));
}

Rational SurfaceModel::intersect(const DivisorClass& a, const DivisorClass& b) const {
  require_size(a);
  require_size(b);
  Rational sum = 0;
  if (base_.kind == BaseKind::ProjectivePlane) {
    sum = a[0] * b[0];
  } else {
    sum = -base_.n * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
  }
  for (std::size_t i = base_.rank(); i < rank(); ++i) sum -= a[i] * b[i];
  return sum;
}

DivisorClass SurfaceModel::anticanonical() const {
  DivisorClass k = DivisorClass::zero(rank());
  if (base_.kind == BaseKind::ProjectivePlane) {
    k[0] = 3;
  } else {
    k[0] = 2;
    k[1] = base_.n + 2;
  }
  for (std::size_t i = base_.rank(); i < rank(); ++i) k[i] = -1;
  return k;
}

SurfaceModel SurfaceModel::with_blowup(BlowUpSpec spec) const {
  SurfaceModel child = *this;
  child.blowups_.push_back(std::move(spec));
  return child;
}

std::string SurfaceModel::format(const DivisorClass& d) const {
  require_size(d);
  const auto names = basis_names();
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational& c = d[i];
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (magnitude != 1) out += magnitude.get_den() == 1 ? magnitude.get_str() : "(" + magnitude.get_str() + ")";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

DivisorClass pullback(const SurfaceModel& child, const DivisorClass& parent_class) {
  if (parent_class.size() + 1 != child.rank())
    throw DimensionMismatch("pullback expects a class from the surface one blow-up earlier");
  RationalVector v(parent_class.coefficients().begin(), parent_class.coefficients().end());
  v.push_back(0);
  return DivisorClass(std::move(v));
}

// ---------------------------------------------------------------------------
// Catalog

bool CurveRecord::answers_to(std::string_view name) const {
  if (id == name) return true;
  return std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

bool is_reserved_id(std::string_view id) {
  if (id.empty()) return true;
  if (id == "Z" || id == "F" || id == "H") return true;
  if (id.size() > 1 && id[0] == 'E' &&
      std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  for (char c : id)
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) return true;
  return false;
}

struct CatalogEditor {
  static std::vector<CurveRecord>& records(CurveCatalog& c) { return c.records_; }
};

CurveCatalog CurveCatalog::for_base(const SurfaceModel& surface) {
  if (surface.blowup_count() != 0) throw PreconditionError("for_base expects a surface without blow-ups");
  CurveCatalog cat;
  auto add = [&](std::string id, DivisorClass klass, bool generic) {
    CurveRecord rec;
    rec.id = std::move(id);
    rec.klass = std::move(klass);
    rec.self_int = surface.self_intersection(rec.klass);
    rec.origin = CurveOrigin::BaseGenerator;
    rec.generic = generic;
    cat.records_.push_back(std::move(rec));
  };
  if (surface.base().kind == BaseKind::ProjectivePlane) {
    add("H", surface.named("H"), true);
  } else {
    add("Z", surface.named("Z"), surface.base().n == 0);
    add("F", surface.named("F"), true);
  }
  cat.recertify(surface);
  return cat;
}

const CurveRecord* CurveCatalog::find(std::string_view name) const {
  for (const auto& r : records_)
    if (r.answers_to(name)) return &r;
  return nullptr;
}

const CurveRecord& CurveCatalog::at(std::string_view name) const {
  if (const auto* r = find(name)) return *r;
  throw UnknownCurve("unknown curve '" + std::string(name) + "'");
}

static void check_pairwise_nonnegative(const SurfaceModel& surface, const std::vector<CurveRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j)
      if (sgn(surface.intersect(records[i].klass, records[j].klass)) < 0)
        throw SncViolation("distinct curves " + records[i].id + " and " + records[j].id +
                           " would have negative intersection number");
}

const CurveRecord& CurveCatalog::declare(const SurfaceModel& surface, std::string id, DivisorClass klass) {
  if (is_reserved_id(id)) throw PreconditionError("curve id '" + id + "' is reserved or malformed");
  if (find(id)) throw PreconditionError("duplicate curve id '" + id + "'");
  if (klass.size() != surface.rank())
    throw DimensionMismatch("class for '" + id + "' has length " + std::to_string(klass.size()) +
                            ", surface rank is " + std::to_string(surface.rank()));
  if (!klass.is_integral()) throw PreconditionError("curve class for '" + id + "' must be integral");
  if (klass.is_zero()) throw PreconditionError("curve class for '" + id + "' is zero");

  const Rational self = surface.self_intersection(klass);
  if (sgn(self) < 0) {
    for (auto& rec : records_) {
      if (rec.generic || rec.klass != klass) continue;
      if (rec.declared)
        throw SncViolation("curves '" + rec.id + "' and '" + id +
                           "' would be distinct irreducible curves in the same negative class");
      rec.aliases.push_back(rec.id);
      rec.id = std::move(id);
      rec.declared = true;
      recertify(surface);
      return rec;
    }
  }

  CurveRecord rec;
  rec.id = std::move(id);
  rec.klass = std::move(klass);
  rec.self_int = self;
  rec.origin = CurveOrigin::Declared;
  rec.declared = true;
  if (surface.hirzebruch_derived() && rec.klass == surface.named("F")) rec.fiber = rec.id;
  auto next = records_;
  next.push_back(rec);
  check_pairwise_nonnegative(surface, next);
  records_ = std::move(next);
  recertify(surface);
  return records_.back();
}

void CurveCatalog::mark_boundary(std::span<const std::string> names) {
  for (auto& rec : records_)
    for (const auto& name : names)
      if (rec.answers_to(name)) rec.in_boundary = true;
}

std::vector<std::size_t> distinct_class_records(const SurfaceModel& surface, const CurveCatalog& catalog) {
  (void)surface;
  std::vector<std::size_t> kept;
  std::vector<RationalVector> directions;
  for (std::size_t i = 0; i < catalog.records().size(); ++i) {
    RationalVector dir(catalog.records()[i].klass.coefficients().begin(), catalog.records()[i].klass.coefficients().end());
    make_primitive(dir);
    if (std::find(directions.begin(), directions.end(), dir) != directions.end()) continue;
    directions.push_back(std::move(dir));
    kept.push_back(i);
  }
  return kept;
}

std::optional<std::vector<DivisorClass>> tracked_nef_rays(const SurfaceModel& surface, const CurveCatalog& catalog) {
  const auto gram = surface.gram_matrix();
  const std::size_t d = surface.rank();
  cone::Matrix rows;
  for (std::size_t i : distinct_class_records(surface, catalog)) {
    const auto& g = catalog.records()[i].klass;
    RationalVector row(d, 0);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (sgn(gram[a][b]) != 0) row[a] += gram[a][b] * g[b];
    rows.push_back(std::move(row));
  }
  auto rays = cone::extreme_rays(rows, d);
  if (!rays) return std::nullopt;
  std::vector<DivisorClass> out;
  for (auto& r : *rays) out.emplace_back(std::move(r));
  return out;
}

void CurveCatalog::recertify(const SurfaceModel& surface) {
  for (auto& rec : records_) rec.self_int = surface.self_intersection(rec.klass);
  const auto rays = tracked_nef_rays(surface, *this);
  bool complete = rays.has_value();
  if (complete) {
    for (std::size_t i = 0; i < rays->size() && complete; ++i)
      for (std::size_t j = i; j < rays->size() && complete; ++j)
        if (sgn(surface.intersect((*rays)[i], (*rays)[j])) < 0) complete = false;
  }
  mori_complete_ = complete;
}

// ---------------------------------------------------------------------------
// Blow-ups

PointIncidence locate_point(const SurfaceModel& surface, const CurveCatalog& catalog, const BlowUpSpec& spec) {
  if (spec.on.size() > 2)
    throw SncViolation("a blown-up point lies on at most two tracked curves, got " + std::to_string(spec.on.size()));
  const auto& records = catalog.records();
  PointIncidence inc;
  for (const auto& name : spec.on) {
    std::size_t idx = records.size();
    for (std::size_t i = 0; i < records.size(); ++i)
      if (records[i].answers_to(name)) idx = i;
    if (idx == records.size()) throw UnknownCurve("unknown curve '" + name + "'");
    if (records[idx].generic)
      throw PreconditionError("'" + name +
                              "' is a general member of its pencil and avoids blown-up points; declare the curve");
    if (std::find(inc.through.begin(), inc.through.end(), idx) != inc.through.end())
      throw PreconditionError("curve '" + name + "' listed twice");
    inc.through.push_back(idx);
    if (records[idx].exceptional_descendant()) inc.infinitely_near = true;
  }

  if (!surface.hirzebruch_derived()) {
    if (spec.fiber_label) throw PreconditionError("fiber labels only apply to surfaces built from F_n");
  } else {
    std::set<std::string> derived;
    for (std::size_t idx : inc.through) {
      const auto& rec = records[idx];
      if (rec.fiber) derived.insert(*rec.fiber);
      if (rec.over_fiber) derived.insert(*rec.over_fiber);
    }
    if (derived.size() > 1) throw SncViolation("a point cannot lie on two different fibers");
    if (spec.fiber_label) {
      if (is_reserved_id(*spec.fiber_label) && spec.fiber_label->find('(') == std::string::npos)
        throw PreconditionError("fiber label '" + *spec.fiber_label + "' is reserved");
      if (const auto* named = catalog.find(*spec.fiber_label); named && named->fiber != *spec.fiber_label)
        throw PreconditionError("fiber label '" + *spec.fiber_label + "' names a curve that is not that fiber");
      if (!derived.empty() && *derived.begin() != *spec.fiber_label)
        throw SncViolation("point lies on fiber '" + *derived.begin() + "' but is labelled '" + *spec.fiber_label +
                           "'");
      inc.fiber_label = spec.fiber_label;
    } else if (!derived.empty()) {
      inc.fiber_label = *derived.begin();
    } else {
      inc.fiber_label = "F(E" + std::to_string(surface.blowup_count() + 1) + ")";
    }
    if (!inc.infinitely_near) {
      std::size_t fiber_idx = records.size();
      for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].fiber == inc.fiber_label) fiber_idx = i;
      if (fiber_idx == records.size()) {
        inc.creates_fiber_record = true;
      } else if (std::find(inc.through.begin(), inc.through.end(), fiber_idx) == inc.through.end()) {
        inc.through.push_back(fiber_idx);
      }
    }
  }

  if (inc.through.size() > 2)
    throw SncViolation("three tracked curves would pass through one point (fiber '" +
                       inc.fiber_label.value_or("?") + "')");
  if (inc.through.size() == 2) {
    const auto& a = records[inc.through[0]];
    const auto& b = records[inc.through[1]];
    if (sgn(surface.intersect(a.klass, b.klass)) <= 0)
      throw SncViolation("curves " + a.id + " and " + b.id + " do not meet, so no point lies on both");
    inc.node = a.in_boundary && b.in_boundary;
  }
  if (inc.node != spec.node)
    throw PreconditionError(spec.node ? "point is not a crossing of two boundary curves"
                                      : "point is a crossing of two boundary curves but is not marked as a node");
  return inc;
}

BlowUpResult blow_up(const SurfaceModel& surface, const CurveCatalog& catalog, const BlowUpSpec& spec) {
  PointIncidence inc = locate_point(surface, catalog, spec);
  SurfaceModel child = surface.with_blowup(spec);
  const std::size_t k = child.blowup_count();
  const DivisorClass e = child.exceptional(k);

  CurveCatalog next = catalog;
  auto& records = CatalogEditor::records(next);
  for (auto& rec : records) rec.klass = pullback(child, rec.klass);
  for (std::size_t idx : inc.through) {
    records[idx].klass -= e;
    records[idx].blown_through.push_back(k);
  }

  CurveRecord exc;
  exc.id = "E" + std::to_string(k);
  exc.klass = e;
  exc.origin = CurveOrigin::Exceptional;
  exc.over_fiber = inc.fiber_label;
  records.push_back(exc);

  if (inc.creates_fiber_record) {
    CurveRecord fib;
    fib.id = spec.fiber_label ? *spec.fiber_label : *inc.fiber_label;
    fib.klass = child.named("F") - e;
    fib.origin = CurveOrigin::FiberInstance;
    fib.fiber = inc.fiber_label;
    fib.blown_through.push_back(k);
    records.push_back(fib);
  }

  for (auto& rec : records) rec.self_int = child.self_intersection(rec.klass);
  check_pairwise_nonnegative(child, records);
  next.recertify(child);
  return BlowUpResult{std::move(child), std::move(next), exc.id, std::move(inc)};
}

}  // namespace alf
