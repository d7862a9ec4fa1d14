#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alf/angle_body.hpp"
#include "alf/pair.hpp"

namespace alf {

/// The four families of minimal ALF pairs of Picard rank two on F_n:
///   ALdP1: Z, Z+(n+2)F          ALdP3: Z, F, F
///   ALdP2: Z, Z+(n+1)F, F       ALdP4: Z, F, F, Z+nF
enum class Family { ALdP1, ALdP2, ALdP3, ALdP4 };

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
constexpr Family kAllFamilies[] = {Family::ALdP1, Family::ALdP2, Family::ALdP3, Family::ALdP4};

PairDescription family_description(Family kind, int n);
LogPair family(Family kind, int n);

/// The closed-form body of ample angles of a family member, written out
/// directly (box plus one linear condition).
RationalPolyhedron expected_family_body(Family kind, int n);

enum class Status { NotALF, ALF, StronglyALF };
const char* to_string(Status s);

struct Finding {
  std::string kind;
  std::string message;
  std::optional<std::string> curve;
  std::optional<DivisorClass> klass;
};

struct Verdict {
  Status status = Status::NotALF;
  AmpleAngleBody body;
  std::vector<Finding> diagnostics;
};

/// Throws PreconditionError for r = 0 and IncompleteMoriData when the Mori
/// cone is not certified.
Verdict classify(const LogPair& pair);

struct DualGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<long>> edges;  // symmetric; edges[i][j] = D_i . D_j for i != j
};

DualGraph dual_graph(const LogPair& pair);

enum class BoundaryShape { Chain, Cycle, Other };
const char* to_string(BoundaryShape s);

struct ShapeReport {
  BoundaryShape shape = BoundaryShape::Other;
  /// Only set for cycles: sum D_i equals -K_X as a class.
  std::optional<bool> anticanonical;
};

/// A single component counts as a chain; two components meeting twice form
/// a cycle of length two.
ShapeReport boundary_shape(const LogPair& pair);

struct Minimality {
  bool minimal = true;
  std::optional<std::string> witness;
};

/// Not minimal iff some tracked smooth rational (-1)-curve E outside the
/// boundary has E.D = 1.
Minimality is_minimal(const LogPair& pair);

struct IncidenceViolation {
  std::string curve;
  Rational boundary_degree;
};

/// Tracked (-1)-curves off the boundary whose intersection with D is not 0
/// or 1.
std::vector<IncidenceViolation> minus_one_incidence_check(const LogPair& pair);

/// Blow-up at a point on exactly one boundary curve; the boundary becomes the
/// proper transform.
LogPair blow_up_type_i(const LogPair& pair, BlowUpSpec spec);
/// Blow-up at a crossing of two boundary curves; the boundary becomes the
/// total transform (the exceptional curve joins as D_{r+1}).
LogPair blow_up_type_ii(const LogPair& pair, BlowUpSpec spec);

/// Crossing used by the repeated node blow-up battery: the newest
/// component's first neighbour in boundary order, or the first crossing
/// overall when the newest component meets nothing. nullopt if no crossing.
std::optional<BlowUpSpec> next_node(const LogPair& pair);

/// ALdP.4.n with one point of C1 and one point of C4 blown up on the same
/// fiber (away from C2, C3).
LogPair obstruction_same_fiber(int n);

struct VerificationRow {
  std::string check;
  std::string subject;
  int n = 0;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int n_max = 0;
  std::vector<VerificationRow> rows;
  bool all_passed() const;
};

/// Runs the classification battery for 0 <= n <= n_max (independent rows are
/// computed concurrently; the row order is fixed).
VerificationReport verify_theorems(int n_max);

}  // namespace alf
