#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "alf/pair.hpp"
#include "alf/polyhedron.hpp"

namespace alf {

/// beta |-> -K_X - sum (1 - beta_i) D_i, split into its constant part
/// -K_X - sum D_i and the linear part beta_i |-> beta_i [D_i].
struct AngleMap {
  DivisorClass constant;
  std::vector<DivisorClass> linear;

  DivisorClass operator()(std::span<const Rational> beta) const;
  /// The affine functional beta |-> Phi(beta) . curve on the given surface.
  LinearConstraint pairing(const SurfaceModel& surface, const DivisorClass& curve, bool strict) const;
};

AngleMap ample_angle_map(const LogPair& pair);

/// Which object induced a constraint of the angle body.
struct ConstraintSource {
  enum class Kind { Curve, BoxLower, BoxUpper };
  Kind kind = Kind::Curve;
  std::size_t coordinate = 0;  // box rows: 0-based beta index
  std::string curve;           // curve rows: catalog id
  DivisorClass klass;          // curve rows: its class
};

/// AA(X, D) as an exact polyhedron in (0,1]^r. The box rows are always
/// present; curve rows are the irredundant strict conditions Phi(beta).C > 0
/// over the Mori generators. For an empty body the curve rows are a minimal
/// subset that already makes the box empty.
struct AmpleAngleBody {
  RationalPolyhedron body{0};
  std::vector<ConstraintSource> provenance;
  bool empty = false;

  std::size_t dim() const { return body.dim(); }
};

/// Throws PreconditionError when r = 0 and IncompleteMoriData when the
/// tracked curves are not certified to generate the Mori cone.
AmpleAngleBody compute_ample_angles(const LogPair& pair);

/// Same polyhedron without redundancy removal, ready to be compared with the
/// preimage of the nef cone: box closure and non-strict generator rows.
RationalPolyhedron nef_preimage(const LogPair& pair);

/// Some eps > 0 gives B_eps intersect (0,1]^r inside the body. Decided row by
/// row: a row a.beta + c (>|>=) 0 passes iff c > 0, or c = 0 with a >= 0
/// (and a != 0 for strict rows). Empty bodies are never strongly ALF.
bool is_strongly_alf(const RationalPolyhedron& body);
bool is_strongly_alf(const AmpleAngleBody& body);

}  // namespace alf
