#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alf/cone.hpp"
#include "alf/rational.hpp"

/// Picard lattices of rational surfaces obtained from P^2 or a Hirzebruch
/// surface F_n by point blow-ups, together with the catalog of tracked
/// irreducible curves on them.
///
/// Basis conventions: P^2 uses (H); F_n uses (Z, F) with Z^2 = -n, Z.F = 1,
/// F^2 = 0. Every blow-up appends an exceptional class E_k (E_k^2 = -1,
/// orthogonal to everything else), so a class on the k-th surface is a
/// coefficient vector of length base_rank + k.
namespace alf {

enum class BaseKind { ProjectivePlane, Hirzebruch };

struct BaseSurface {
  BaseKind kind = BaseKind::ProjectivePlane;
  int n = 0;  // Hirzebruch index; unused for P^2

  static BaseSurface projective_plane() { return {BaseKind::ProjectivePlane, 0}; }
  static BaseSurface hirzebruch(int n);

  std::size_t rank() const { return kind == BaseKind::ProjectivePlane ? 1 : 2; }
  bool operator==(const BaseSurface&) const = default;
};

/// Exact divisor (or curve) class over the Picard basis of one surface.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(RationalVector coefficients) : coefficients_(std::move(coefficients)) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(RationalVector(rank, 0)); }
  static DivisorClass unit(std::size_t rank, std::size_t index);

  std::size_t size() const { return coefficients_.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  Rational& operator[](std::size_t i) { return coefficients_[i]; }
  std::span<const Rational> coefficients() const { return coefficients_; }

  bool is_zero() const { return alf::is_zero(coefficients_); }
  bool is_integral() const { return alf::is_integral(coefficients_); }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& factor);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& q, DivisorClass a) { return a *= q; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  bool operator==(const DivisorClass&) const = default;

 private:
  RationalVector coefficients_;
};

/// A point to blow up, described only by which tracked curves pass through it.
struct BlowUpSpec {
  std::vector<std::string> on;              // at most two tracked curves
  std::optional<std::string> fiber_label;   // which member of |F| holds the point
  bool node = false;                        // point is a crossing of two boundary curves
  bool operator==(const BlowUpSpec&) const = default;
};

class SurfaceModel {
 public:
  explicit SurfaceModel(BaseSurface base) : base_(base) {}

  const BaseSurface& base() const { return base_; }
  bool hirzebruch_derived() const { return base_.kind == BaseKind::Hirzebruch; }
  std::size_t rank() const { return base_.rank() + blowups_.size(); }
  std::size_t blowup_count() const { return blowups_.size(); }
  const std::vector<BlowUpSpec>& blowups() const { return blowups_; }

  /// "H" or "Z","F", followed by "E1".."Ek".
  std::vector<std::string> basis_names() const;
  std::optional<std::size_t> basis_index(std::string_view name) const;
  /// Class of a basis element by name; throws UnknownCurve.
  DivisorClass named(std::string_view name) const;
  /// E_k for 1 <= k <= blowup_count().
  DivisorClass exceptional(std::size_t k) const;

  cone::Matrix gram_matrix() const;
  Rational intersect(const DivisorClass& a, const DivisorClass& b) const;
  Rational self_intersection(const DivisorClass& a) const { return intersect(a, a); }
  /// -K_X.
  DivisorClass anticanonical() const;

  /// Surface obtained by one further blow-up (combinatorial bookkeeping only;
  /// catalog-aware validation lives in blow_up()).
  SurfaceModel with_blowup(BlowUpSpec spec) const;

  /// Human-readable class, e.g. "Z+4F-E1", "3H", "0".
  std::string format(const DivisorClass& d) const;

 private:
  void require_size(const DivisorClass& d) const;

  BaseSurface base_;
  std::vector<BlowUpSpec> blowups_;
};

/// Pulls a class on the parent surface back to child = parent blown up once
/// more: coefficients are copied and the new E coefficient is zero.
DivisorClass pullback(const SurfaceModel& child, const DivisorClass& parent_class);

enum class CurveOrigin { BaseGenerator, Declared, Exceptional, FiberInstance };

struct CurveRecord {
  std::string id;
  std::vector<std::string> aliases;
  DivisorClass klass;
  Rational self_int;
  CurveOrigin origin = CurveOrigin::Declared;
  /// Indices (1-based) of the blow-ups whose centre lay on this curve; the
  /// current class is the original one minus the matching E's.
  std::vector<std::size_t> blown_through;
  /// Set when the curve is (the proper transform of) a member of |F|.
  std::optional<std::string> fiber;
  /// Exceptional curves: the fiber containing the blown-up point.
  std::optional<std::string> over_fiber;
  /// A general member of a base pencil (the base generators H, F, and Z on
  /// F_0). Such curves avoid every blown-up point by definition.
  bool generic = false;
  bool declared = false;
  bool in_boundary = false;

  bool answers_to(std::string_view name) const;
  bool exceptional_descendant() const { return origin == CurveOrigin::Exceptional; }
};

/// Tracked irreducible curves of a surface plus a Mori-completeness
/// certificate. The certificate holds exactly when the cone K spanned by the
/// tracked classes is full-dimensional and every pair of extreme rays of the
/// dual cone K^v pairs non-negatively; then K^v consists of nef classes and
/// K is the Mori cone.
class CurveCatalog {
 public:
  static CurveCatalog for_base(const SurfaceModel& surface);

  const std::vector<CurveRecord>& records() const { return records_; }
  const CurveRecord* find(std::string_view name) const;
  const CurveRecord& at(std::string_view name) const;
  bool mori_complete() const { return mori_complete_; }

  /// Adds a user-declared irreducible curve. A class with negative square
  /// that matches an undeclared tracked curve names that same curve (such a
  /// curve is unique in its class); the record then takes the new id.
  const CurveRecord& declare(const SurfaceModel& surface, std::string id, DivisorClass klass);

  /// Marks every record answering to one of the names as a boundary curve.
  void mark_boundary(std::span<const std::string> names);

  void recertify(const SurfaceModel& surface);

 private:
  friend struct CatalogEditor;
  std::vector<CurveRecord> records_;
  bool mori_complete_ = false;
};

/// Where a blow-up centre sits, resolved against the catalog.
struct PointIncidence {
  std::vector<std::size_t> through;        // record indices (incl. an implied fiber)
  std::optional<std::string> fiber_label;  // Hirzebruch-derived surfaces only
  bool infinitely_near = false;            // lies on an exceptional curve
  bool node = false;                       // crossing of two boundary curves
  bool creates_fiber_record = false;
};

PointIncidence locate_point(const SurfaceModel& surface, const CurveCatalog& catalog, const BlowUpSpec& spec);

struct BlowUpResult {
  SurfaceModel surface;
  CurveCatalog catalog;
  std::string exceptional_id;
  PointIncidence incidence;
};

/// Blows up one point. Every tracked curve through the point is replaced by
/// its proper transform C - E; the exceptional curve is added; on
/// Hirzebruch-derived surfaces the fiber through the point gets (or
/// updates) a fiber-instance record F - sum E. Throws SncViolation,
/// UnknownCurve or PreconditionError on inconsistent input.
BlowUpResult blow_up(const SurfaceModel& surface, const CurveCatalog& catalog, const BlowUpSpec& spec);

/// Extreme rays of the dual of the cone spanned by the tracked curve classes
/// (nullopt when that cone is not full-dimensional).
std::optional<std::vector<DivisorClass>> tracked_nef_rays(const SurfaceModel& surface,
                                                         const CurveCatalog& catalog);

/// Distinct (up to positive scaling) tracked curve classes, first record wins.
std::vector<std::size_t> distinct_class_records(const SurfaceModel& surface, const CurveCatalog& catalog);

bool is_reserved_id(std::string_view id);

}  // namespace alf
