#include "alf/angle_body.hpp"

#include "alf/error.hpp"
#include "alf/positivity.hpp"

namespace alf {

DivisorClass AngleMap::operator()(std::span<const Rational> beta) const {
  if (beta.size() != linear.size())
    throw DimensionMismatch("angle vector has " + std::to_string(beta.size()) + " entries, boundary has " +
                            std::to_string(linear.size()) + " components");
  DivisorClass value = constant;
  for (std::size_t i = 0; i < linear.size(); ++i) value += beta[i] * linear[i];
  return value;
}

LinearConstraint AngleMap::pairing(const SurfaceModel& surface, const DivisorClass& curve, bool strict) const {
  LinearConstraint row{RationalVector(linear.size()), surface.intersect(constant, curve), strict};
  for (std::size_t i = 0; i < linear.size(); ++i) row.coefficients[i] = surface.intersect(linear[i], curve);
  return row;
}

AngleMap ample_angle_map(const LogPair& pair) {
  if (pair.size() == 0) throw PreconditionError("the angle map needs at least one boundary component");
  AngleMap map;
  map.constant = pair.surface().anticanonical() - pair.boundary_sum();
  map.linear = pair.boundary_classes();
  return map;
}

namespace {

void require_complete(const LogPair& pair) {
  if (!pair.catalog().mori_complete())
    throw IncompleteMoriData(
        "the tracked curves are not certified to generate the Mori cone; declare the missing negative curves");
}

void append_box(RationalPolyhedron& p, std::vector<ConstraintSource>& provenance, std::size_t r, bool closed) {
  const RationalPolyhedron box = half_open_box(r);
  for (std::size_t i = 0; i < box.constraints().size(); ++i) {
    LinearConstraint c = box.constraints()[i];
    if (closed) c.strict = false;
    p.add(std::move(c));
    ConstraintSource src;
    src.kind = i % 2 == 0 ? ConstraintSource::Kind::BoxLower : ConstraintSource::Kind::BoxUpper;
    src.coordinate = i / 2;
    provenance.push_back(std::move(src));
  }
}

}  // namespace

AmpleAngleBody compute_ample_angles(const LogPair& pair) {
  const std::size_t r = pair.size();
  if (r == 0) throw PreconditionError("a log pair needs at least one boundary component");
  require_complete(pair);

  const AngleMap map = ample_angle_map(pair);
  RationalPolyhedron all(r);
  std::vector<ConstraintSource> provenance;
  for (const auto& g : mori_generators(pair.surface(), pair.catalog()).generators) {
    all.add(map.pairing(pair.surface(), g.klass, true));
    ConstraintSource src;
    src.curve = g.curve;
    src.klass = g.klass;
    provenance.push_back(std::move(src));
  }
  const std::size_t curve_rows = provenance.size();
  append_box(all, provenance, r, false);

  std::vector<bool> removable(all.constraints().size(), false);
  for (std::size_t i = 0; i < curve_rows; ++i) removable[i] = true;

  AmpleAngleBody out;
  out.body = RationalPolyhedron(r);
  out.empty = is_empty(all);
  std::vector<std::size_t> keep;
  if (out.empty) {
    keep = infeasible_core(all, removable);
    for (std::size_t i = curve_rows; i < all.constraints().size(); ++i) keep.push_back(i);
  } else {
    keep = irredundant_indices(all, removable);
  }
  for (std::size_t i : keep) {
    out.body.add(all.constraints()[i]);
    out.provenance.push_back(provenance[i]);
  }
  return out;
}

RationalPolyhedron nef_preimage(const LogPair& pair) {
  const std::size_t r = pair.size();
  if (r == 0) throw PreconditionError("a log pair needs at least one boundary component");
  require_complete(pair);
  const AngleMap map = ample_angle_map(pair);
  RationalPolyhedron p(r);
  std::vector<ConstraintSource> unused;
  append_box(p, unused, r, true);
  for (const auto& g : mori_generators(pair.surface(), pair.catalog()).generators)
    p.add(map.pairing(pair.surface(), g.klass, false));
  return p;
}

bool is_strongly_alf(const RationalPolyhedron& body) {
  if (is_empty(body)) return false;
  for (const auto& row : body.constraints()) {
    const int c = sgn(row.constant);
    if (c > 0) continue;
    if (c < 0) return false;
    bool nonnegative = true, positive = false;
    for (const auto& a : row.coefficients) {
      nonnegative = nonnegative && sgn(a) >= 0;
      positive = positive || sgn(a) > 0;
    }
    if (!nonnegative) return false;
    if (!positive && row.strict) return false;
  }
  return true;
}

bool is_strongly_alf(const AmpleAngleBody& body) { return !body.empty && is_strongly_alf(body.body); }

}  // namespace alf
