#include "alf/classification.hpp"

#include <future>
#include <queue>

#include "alf/error.hpp"
#include "alf/positivity.hpp"

namespace alf {

const char* to_string(Family f) {
  switch (f) {
    case Family::ALdP1:
      return "ALdP1";
    case Family::ALdP2:
      return "ALdP2";
    case Family::ALdP3:
      return "ALdP3";
    case Family::ALdP4:
      return "ALdP4";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    const std::string canonical = to_string(f);
    const std::string dotted = "ALdP." + canonical.substr(4);
    if (name == canonical || name == dotted) return f;
  }
  return std::nullopt;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::NotALF:
      return "NotALF";
    case Status::ALF:
      return "ALF";
    case Status::StronglyALF:
      return "StronglyALF";
  }
  return "?";
}

const char* to_string(BoundaryShape s) {
  switch (s) {
    case BoundaryShape::Chain:
      return "Chain";
    case BoundaryShape::Cycle:
      return "Cycle";
    case BoundaryShape::Other:
      return "Other";
  }
  return "?";
}

PairDescription family_description(Family kind, int n) {
  if (n < 0) throw PreconditionError("family index n must be non-negative, got " + std::to_string(n));
  PairDescription d;
  d.base = BaseSurface::hirzebruch(n);
  auto curve = [&](std::string id, ClassSpec klass) {
    d.curves.push_back({id, normalize_class_spec(std::move(klass)), 0});
    d.boundary.push_back(std::move(id));
  };
  curve("C1", {{"Z", 1}});
  switch (kind) {
    case Family::ALdP1:
      curve("C2", {{"Z", 1}, {"F", n + 2}});
      break;
    case Family::ALdP2:
      curve("C2", {{"Z", 1}, {"F", n + 1}});
      curve("C3", {{"F", 1}});
      break;
    case Family::ALdP3:
      curve("C2", {{"F", 1}});
      curve("C3", {{"F", 1}});
      break;
    case Family::ALdP4:
      curve("C2", {{"F", 1}});
      curve("C3", {{"F", 1}});
      curve("C4", {{"Z", 1}, {"F", n}});
      break;
  }
  return d;
}

LogPair family(Family kind, int n) { return build_pair(family_description(kind, n)); }

RationalPolyhedron expected_family_body(Family kind, int n) {
  const std::size_t r = kind == Family::ALdP1 ? 2 : kind == Family::ALdP4 ? 4 : 3;
  RationalPolyhedron p = half_open_box(r);
  LinearConstraint row{RationalVector(r, 0), 0, true};
  row.coefficients[0] = -n;
  if (kind == Family::ALdP1) {
    row.coefficients[1] = 2;
  } else {
    row.coefficients[1] = 1;
    row.coefficients[2] = 1;
  }
  p.add(std::move(row));
  return p;
}

// ---------------------------------------------------------------------------

Verdict classify(const LogPair& pair) {
  Verdict v;
  v.body = compute_ample_angles(pair);
  if (v.body.empty)
    v.status = Status::NotALF;
  else
    v.status = is_strongly_alf(v.body) ? Status::StronglyALF : Status::ALF;

  const auto& surface = pair.surface();
  if (v.body.empty) {
    for (std::size_t i = 0; i < v.body.provenance.size(); ++i) {
      const auto& src = v.body.provenance[i];
      if (src.kind != ConstraintSource::Kind::Curve) continue;
      const auto& row = v.body.body.constraints()[i];
      const bool vanishes = is_zero(row.coefficients) && sgn(row.constant) == 0;
      Finding f;
      f.kind = "empty_body";
      f.message = vanishes ? "Phi(beta) pairs to zero with " + src.curve + " (" + surface.format(src.klass) +
                                 ") for every beta, so no angle vector is ample"
                           : "condition " + row.to_string() + " from " + src.curve + " (" +
                                 surface.format(src.klass) + ") cannot hold inside the angle box";
      f.curve = src.curve;
      f.klass = src.klass;
      v.diagnostics.push_back(std::move(f));
    }
  }
  for (const auto& rec : negative_curves(surface, pair.catalog())) {
    if (pair.in_boundary(rec.id) || rec.self_int > -2) continue;
    Finding f;
    f.kind = "negative_curve";
    f.message = "curve " + rec.id + " (" + surface.format(rec.klass) + ") off the boundary has self-intersection " +
                rec.self_int.get_str();
    f.curve = rec.id;
    f.klass = rec.klass;
    v.diagnostics.push_back(std::move(f));
  }
  for (const auto& viol : minus_one_incidence_check(pair)) {
    Finding f;
    f.kind = "minus_one_incidence";
    f.message = "(-1)-curve " + viol.curve + " meets the boundary with multiplicity " + viol.boundary_degree.get_str();
    f.curve = viol.curve;
    f.klass = pair.catalog().at(viol.curve).klass;
    v.diagnostics.push_back(std::move(f));
  }
  return v;
}

DualGraph dual_graph(const LogPair& pair) {
  DualGraph g;
  g.nodes = pair.boundary();
  const auto classes = pair.boundary_classes();
  const std::size_t r = classes.size();
  g.edges.assign(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) g.edges[i][j] = pair.surface().intersect(classes[i], classes[j]).get_num().get_si();
  return g;
}

ShapeReport boundary_shape(const LogPair& pair) {
  const DualGraph g = dual_graph(pair);
  const std::size_t r = g.nodes.size();
  ShapeReport out;
  if (r == 0) return out;
  if (r == 1) {
    out.shape = BoundaryShape::Chain;
    return out;
  }

  std::vector<long> degree(r, 0);
  long edge_count = 0;
  long max_multiplicity = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      degree[i] += g.edges[i][j];
      if (i < j) {
        edge_count += g.edges[i][j];
        max_multiplicity = std::max(max_multiplicity, g.edges[i][j]);
      }
    }

  std::vector<bool> seen(r, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop();
    for (std::size_t j = 0; j < r; ++j)
      if (!seen[j] && g.edges[i][j] > 0) {
        seen[j] = true;
        ++reached;
        frontier.push(j);
      }
  }
  if (reached != r) return out;

  const bool all_two = std::all_of(degree.begin(), degree.end(), [](long d) { return d == 2; });
  if (all_two) {
    out.shape = BoundaryShape::Cycle;
    out.anticanonical = pair.boundary_sum() == pair.surface().anticanonical();
  } else if (max_multiplicity <= 1 && edge_count == static_cast<long>(r) - 1 &&
             std::all_of(degree.begin(), degree.end(), [](long d) { return d <= 2; })) {
    out.shape = BoundaryShape::Chain;
  }
  return out;
}

namespace {

bool is_smooth_rational_minus_one(const SurfaceModel& surface, const CurveRecord& rec) {
  return rec.self_int == -1 && surface.intersect(surface.anticanonical(), rec.klass) == 1;
}

}  // namespace

Minimality is_minimal(const LogPair& pair) {
  const DivisorClass d = pair.boundary_sum();
  for (const auto& rec : pair.catalog().records()) {
    if (pair.in_boundary(rec.id) || !is_smooth_rational_minus_one(pair.surface(), rec)) continue;
    if (pair.surface().intersect(rec.klass, d) == 1) return {false, rec.id};
  }
  return {};
}

std::vector<IncidenceViolation> minus_one_incidence_check(const LogPair& pair) {
  const DivisorClass d = pair.boundary_sum();
  std::vector<IncidenceViolation> out;
  for (const auto& rec : pair.catalog().records()) {
    if (pair.in_boundary(rec.id) || !is_smooth_rational_minus_one(pair.surface(), rec)) continue;
    const Rational degree = pair.surface().intersect(rec.klass, d);
    if (degree != 0 && degree != 1) out.push_back({rec.id, degree});
  }
  return out;
}

LogPair blow_up_type_i(const LogPair& pair, BlowUpSpec spec) {
  if (spec.node) throw PreconditionError("type (i) blow-ups are centred on the smooth locus of the boundary");
  const PointIncidence inc = locate_point(pair.surface(), pair.catalog(), spec);
  std::size_t on_boundary = 0;
  for (std::size_t idx : inc.through)
    if (pair.in_boundary(pair.catalog().records()[idx].id)) ++on_boundary;
  if (on_boundary != 1)
    throw PreconditionError("type (i) needs a point on exactly one boundary curve, this one lies on " +
                            std::to_string(on_boundary));
  PairDescription next = pair.description();
  next.blowups.push_back(std::move(spec));
  return build_pair(next);
}

LogPair blow_up_type_ii(const LogPair& pair, BlowUpSpec spec) {
  if (!spec.node) throw PreconditionError("type (ii) blow-ups are centred on a crossing of the boundary");
  locate_point(pair.surface(), pair.catalog(), spec);
  PairDescription next = pair.description();
  next.blowups.push_back(std::move(spec));
  next.boundary.push_back("E" + std::to_string(next.blowups.size()));
  return build_pair(next);
}

std::optional<BlowUpSpec> next_node(const LogPair& pair) {
  const DualGraph g = dual_graph(pair);
  const std::size_t r = g.nodes.size();
  if (r < 2) return std::nullopt;
  const std::size_t newest = r - 1;
  for (std::size_t j = 0; j < newest; ++j)
    if (g.edges[newest][j] > 0) return BlowUpSpec{{g.nodes[j], g.nodes[newest]}, std::nullopt, true};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (g.edges[i][j] > 0) return BlowUpSpec{{g.nodes[i], g.nodes[j]}, std::nullopt, true};
  return std::nullopt;
}

LogPair obstruction_same_fiber(int n) {
  if (n < 1) throw PreconditionError("the same-fiber obstruction is built on ALdP.4.n with n >= 1");
  LogPair pair = family(Family::ALdP4, n);
  pair = blow_up_type_i(pair, BlowUpSpec{{"C1"}, "f", false});
  pair = blow_up_type_i(pair, BlowUpSpec{{"C4"}, "f", false});
  return pair;
}

// ---------------------------------------------------------------------------

bool VerificationReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
}

VerificationReport verify_theorems(int n_max) {
  if (n_max < 1) throw PreconditionError("verify needs n_max >= 1");
  std::vector<std::future<VerificationRow>> tasks;

  for (Family kind : kAllFamilies) {
    for (int n = 0; n <= n_max; ++n) {
      tasks.push_back(std::async(std::launch::async, [kind, n] {
        VerificationRow row{"family_body", to_string(kind), n, false, {}};
        const Verdict v = classify(family(kind, n));
        const bool formula = equals(v.body.body, expected_family_body(kind, n));
        const Status want = n == 0 ? Status::StronglyALF : Status::ALF;
        row.passed = formula && v.status == want;
        row.detail = std::string("formula ") + (formula ? "matches" : "differs") + ", status " + to_string(v.status) +
                     " (expected " + to_string(want) + ")";
        return row;
      }));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back(std::async(std::launch::async, [n] {
      VerificationRow row{"node_blowup", "ALdP1", n, false, {}};
      const LogPair base = family(Family::ALdP1, n);
      const Verdict v = classify(blow_up_type_ii(base, *next_node(base)));
      row.passed = v.status == Status::ALF;
      row.detail = std::string("status ") + to_string(v.status) + " (expected ALF)";
      return row;
    }));
  }
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back(std::async(std::launch::async, [n] {
      VerificationRow row{"same_fiber_obstruction", "ALdP4", n, false, {}};
      const Verdict v = classify(obstruction_same_fiber(n));
      row.passed = v.status == Status::NotALF;
      row.detail = std::string("status ") + to_string(v.status) + " (expected NotALF)";
      return row;
    }));
  }

  VerificationReport report;
  report.n_max = n_max;
  for (auto& t : tasks) report.rows.push_back(t.get());
  return report;
}

}  // namespace alf
