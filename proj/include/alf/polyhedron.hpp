#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alf/rational.hpp"

namespace alf {

/// a . x + c > 0 (strict) or a . x + c >= 0.
struct LinearConstraint {
  RationalVector coefficients;
  Rational constant = 0;
  bool strict = false;

  Rational evaluate(std::span<const Rational> point) const;
  bool satisfied_by(std::span<const Rational> point) const;
  /// The complementary half-space: not(a.x + c > 0) is -a.x - c >= 0 and
  /// vice versa.
  LinearConstraint negated() const;
  /// "-2β1+2β2>0"; variables are numbered from 1.
  std::string to_string() const;
  bool operator==(const LinearConstraint&) const = default;
};

class RationalPolyhedron {
 public:
  explicit RationalPolyhedron(std::size_t dim) : dim_(dim) {}
  RationalPolyhedron(std::size_t dim, std::vector<LinearConstraint> constraints);

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  void add(LinearConstraint c);
  bool contains(std::span<const Rational> point) const;

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
};

/// 0 < x_i <= 1 for every coordinate.
RationalPolyhedron half_open_box(std::size_t dim);

/// Exact emptiness by Fourier-Motzkin elimination. A combination is strict
/// iff one of its parents is; derived rows built from more than k+1
/// original rows after k eliminations are dropped (Chernikov's rule).
bool is_empty(const RationalPolyhedron& p);

/// Topological closure: strict rows become non-strict; the empty set stays
/// empty (represented by the single row -1 >= 0).
RationalPolyhedron closure(const RationalPolyhedron& p);

/// Every point of p satisfies c.
bool implies(const RationalPolyhedron& p, const LinearConstraint& c);

/// Set equality by mutual implication. Throws DimensionMismatch.
bool equals(const RationalPolyhedron& p, const RationalPolyhedron& q);

/// Indices of a subset of constraints describing the same set, obtained by
/// dropping, in index order, every removable row implied by the rows that
/// remain. The result is irredundant among removable rows.
std::vector<std::size_t> irredundant_indices(const RationalPolyhedron& p, const std::vector<bool>& removable);
RationalPolyhedron remove_redundant(const RationalPolyhedron& p);

/// For an empty p: a minimal set of removable rows that, together with all
/// non-removable rows, is still empty (deletion filter in index order).
std::vector<std::size_t> infeasible_core(const RationalPolyhedron& p, const std::vector<bool>& removable);

/// A rational point satisfying every constraint (strict ones strictly), or
/// nullopt iff p is empty.
std::optional<RationalVector> sample_point(const RationalPolyhedron& p);

bool is_bounded(const RationalPolyhedron& p);

/// Vertices of the closure in lexicographic order; empty for an empty p.
/// Throws PreconditionError when the closure is unbounded.
std::vector<RationalVector> vertices(const RationalPolyhedron& p);

}  // namespace alf
