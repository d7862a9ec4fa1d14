#include "alf/polyhedron.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "alf/cone.hpp"
#include "alf/error.hpp"

namespace alf {

// ---------------------------------------------------------------------------
// LinearConstraint / RationalPolyhedron

Rational LinearConstraint::evaluate(std::span<const Rational> point) const {
  return dot(coefficients, point) + constant;
}

bool LinearConstraint::satisfied_by(std::span<const Rational> point) const {
  const int s = sgn(evaluate(point));
  return strict ? s > 0 : s >= 0;
}

LinearConstraint LinearConstraint::negated() const {
  LinearConstraint n{coefficients, -constant, !strict};
  for (auto& a : n.coefficients) a = -a;
  return n;
}

std::string LinearConstraint::to_string() const {
  std::string out;
  auto term = [&](const Rational& c, const std::string& var) {
    if (sgn(c) == 0) return;
    const Rational m = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (var.empty())
      out += m.get_str();
    else if (m.get_den() != 1)
      out += "(" + m.get_str() + ")" + var;
    else
      out += (m == 1 ? "" : m.get_str()) + var;
  };
  for (std::size_t i = 0; i < coefficients.size(); ++i) term(coefficients[i], "β" + std::to_string(i + 1));
  term(constant, "");
  if (out.empty()) out = "0";
  return out + (strict ? ">0" : ">=0");
}

RationalPolyhedron::RationalPolyhedron(std::size_t dim, std::vector<LinearConstraint> constraints) : dim_(dim) {
  for (auto& c : constraints) add(std::move(c));
}

void RationalPolyhedron::add(LinearConstraint c) {
  if (c.coefficients.size() != dim_)
    throw DimensionMismatch("constraint with " + std::to_string(c.coefficients.size()) +
                            " coefficients in a polyhedron of dimension " + std::to_string(dim_));
  constraints_.push_back(std::move(c));
}

bool RationalPolyhedron::contains(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimensionMismatch("point has the wrong dimension");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(point); });
}

RationalPolyhedron half_open_box(std::size_t dim) {
  RationalPolyhedron box(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    LinearConstraint lower{RationalVector(dim, 0), 0, true};
    lower.coefficients[i] = 1;
    LinearConstraint upper{RationalVector(dim, 0), 1, false};
    upper.coefficients[i] = -1;
    box.add(std::move(lower));
    box.add(std::move(upper));
  }
  return box;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

struct Row {
  RationalVector a;  // coefficients followed by the constant term
  bool strict = false;
  boost::dynamic_bitset<> history;

  std::size_t dim() const { return a.size() - 1; }
  const Rational& constant() const { return a.back(); }
  bool homogeneous_zero() const {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (sgn(a[i]) != 0) return false;
    return true;
  }
  bool trivially_true() const {
    const int s = sgn(constant());
    return homogeneous_zero() && (s > 0 || (s == 0 && !strict));
  }
  bool trivially_false() const {
    const int s = sgn(constant());
    return homogeneous_zero() && (s < 0 || (s == 0 && strict));
  }
};

struct System {
  std::vector<Row> rows;
  bool infeasible = false;
};

System make_system(const RationalPolyhedron& p) {
  System sys;
  const std::size_t m = p.constraints().size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints()[i];
    Row row;
    row.a.assign(c.coefficients.begin(), c.coefficients.end());
    row.a.push_back(c.constant);
    row.strict = c.strict;
    row.history.resize(m);
    row.history.set(i);
    make_primitive(row.a);
    if (row.trivially_false()) sys.infeasible = true;
    if (row.trivially_true()) continue;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

// Eliminates one variable. `eliminated` counts eliminations including this one.
System eliminate(const System& in, std::size_t var, std::size_t eliminated) {
  System out;
  std::vector<const Row*> pos, neg;
  for (const auto& row : in.rows) {
    const int s = sgn(row.a[var]);
    if (s > 0)
      pos.push_back(&row);
    else if (s < 0)
      neg.push_back(&row);
    else
      out.rows.push_back(row);
  }
  for (const Row* p : pos) {
    for (const Row* q : neg) {
      boost::dynamic_bitset<> history = p->history | q->history;
      if (history.count() > eliminated + 1) continue;
      Row combined;
      combined.a.resize(p->a.size());
      const Rational fp = -q->a[var];
      const Rational fq = p->a[var];
      for (std::size_t j = 0; j < p->a.size(); ++j) combined.a[j] = fp * p->a[j] + fq * q->a[j];
      combined.a[var] = 0;
      combined.strict = p->strict || q->strict;
      combined.history = std::move(history);
      make_primitive(combined.a);
      if (combined.trivially_true()) continue;
      if (combined.trivially_false()) out.infeasible = true;
      out.rows.push_back(std::move(combined));
    }
  }
  // exact duplicates (same row, strictness and history) carry no information
  std::sort(out.rows.begin(), out.rows.end(), [](const Row& x, const Row& y) {
    if (x.a != y.a) return lex_less(x.a, y.a);
    if (x.strict != y.strict) return x.strict < y.strict;
    return x.history < y.history;
  });
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end(),
                             [](const Row& x, const Row& y) {
                               return x.a == y.a && x.strict == y.strict && x.history == y.history;
                             }),
                 out.rows.end());
  out.infeasible = out.infeasible || in.infeasible;
  return out;
}

// Variable still occurring in the system with the cheapest pos*neg product.
std::optional<std::size_t> pick_variable(const System& sys, std::size_t dim) {
  std::optional<std::size_t> best;
  long best_cost = 0;
  for (std::size_t v = 0; v < dim; ++v) {
    long pos = 0, neg = 0;
    for (const auto& row : sys.rows) {
      const int s = sgn(row.a[v]);
      pos += s > 0;
      neg += s < 0;
    }
    if (pos + neg == 0) continue;
    const long cost = pos * neg - pos - neg;
    if (!best || cost < best_cost) {
      best = v;
      best_cost = cost;
    }
  }
  return best;
}

RationalPolyhedron with_extra(const RationalPolyhedron& p, const LinearConstraint& c) {
  RationalPolyhedron q = p;
  q.add(c);
  return q;
}

RationalPolyhedron subset(const RationalPolyhedron& p, const std::vector<bool>& keep) {
  RationalPolyhedron q(p.dim());
  for (std::size_t i = 0; i < p.constraints().size(); ++i)
    if (keep[i]) q.add(p.constraints()[i]);
  return q;
}

}  // namespace

bool is_empty(const RationalPolyhedron& p) {
  System sys = make_system(p);
  std::size_t eliminated = 0;
  while (!sys.infeasible) {
    const auto var = pick_variable(sys, p.dim());
    if (!var) return false;  // only trivially true rows remain
    sys = eliminate(sys, *var, ++eliminated);
  }
  return true;
}

RationalPolyhedron closure(const RationalPolyhedron& p) {
  if (is_empty(p)) return RationalPolyhedron(p.dim(), {LinearConstraint{RationalVector(p.dim(), 0), -1, false}});
  RationalPolyhedron q(p.dim());
  for (auto c : p.constraints()) {
    c.strict = false;
    q.add(std::move(c));
  }
  return q;
}

bool implies(const RationalPolyhedron& p, const LinearConstraint& c) {
  if (c.coefficients.size() != p.dim()) throw DimensionMismatch("constraint dimension differs from polyhedron");
  return is_empty(with_extra(p, c.negated()));
}

bool equals(const RationalPolyhedron& p, const RationalPolyhedron& q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("comparing polyhedra of dimensions " + std::to_string(p.dim()) + " and " +
                            std::to_string(q.dim()));
  const bool pe = is_empty(p);
  const bool qe = is_empty(q);
  if (pe || qe) return pe == qe;
  for (const auto& c : q.constraints())
    if (!implies(p, c)) return false;
  for (const auto& c : p.constraints())
    if (!implies(q, c)) return false;
  return true;
}

std::vector<std::size_t> irredundant_indices(const RationalPolyhedron& p, const std::vector<bool>& removable) {
  const std::size_t m = p.constraints().size();
  std::vector<bool> keep(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (!removable[i]) continue;
    keep[i] = false;
    if (!implies(subset(p, keep), p.constraints()[i])) keep[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

RationalPolyhedron remove_redundant(const RationalPolyhedron& p) {
  RationalPolyhedron q(p.dim());
  for (std::size_t i : irredundant_indices(p, std::vector<bool>(p.constraints().size(), true)))
    q.add(p.constraints()[i]);
  return q;
}

std::vector<std::size_t> infeasible_core(const RationalPolyhedron& p, const std::vector<bool>& removable) {
  const std::size_t m = p.constraints().size();
  std::vector<bool> keep(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (!removable[i]) continue;
    keep[i] = false;
    if (!is_empty(subset(p, keep))) keep[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (keep[i] && removable[i]) out.push_back(i);
  return out;
}

std::optional<RationalVector> sample_point(const RationalPolyhedron& p) {
  const std::size_t dim = p.dim();
  // stages[j] constrains variables 0..j-1 only (stages[dim] is the input).
  std::vector<System> stages(dim + 1);
  stages[dim] = make_system(p);
  if (stages[dim].infeasible) return std::nullopt;
  for (std::size_t j = dim; j > 0; --j) {
    stages[j - 1] = eliminate(stages[j], j - 1, dim - j + 1);
    if (stages[j - 1].infeasible) return std::nullopt;
  }

  RationalVector x(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& row : stages[j + 1].rows) {
      const Rational& a = row.a[j];
      if (sgn(a) == 0) continue;
      Rational rest = row.constant();
      for (std::size_t i = 0; i < j; ++i) rest += row.a[i] * x[i];
      const Rational bound = -rest / a;
      if (sgn(a) > 0) {
        if (!lo || bound > *lo || (bound == *lo && row.strict)) {
          lo_strict = row.strict || (lo && bound == *lo && lo_strict);
          lo = bound;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && row.strict)) {
          hi_strict = row.strict || (hi && bound == *hi && hi_strict);
          hi = bound;
        }
      }
    }
    if (lo && hi)
      x[j] = *lo == *hi ? *lo : (*lo + *hi) / 2;
    else if (lo)
      x[j] = lo_strict ? *lo + 1 : *lo;
    else if (hi)
      x[j] = hi_strict ? *hi - 1 : *hi;
    else
      x[j] = 0;
  }
  if (!p.contains(x)) throw std::logic_error("sample_point: back-substitution produced an infeasible point");
  return x;
}

bool is_bounded(const RationalPolyhedron& p) {
  if (is_empty(p)) return true;
  const std::size_t dim = p.dim();
  RationalPolyhedron recession(dim);
  for (const auto& c : p.constraints()) recession.add(LinearConstraint{c.coefficients, 0, false});
  for (std::size_t i = 0; i < dim; ++i) {
    for (int sign : {1, -1}) {
      LinearConstraint dir{RationalVector(dim, 0), 0, true};
      dir.coefficients[i] = sign;
      if (!is_empty(with_extra(recession, dir))) return false;
    }
  }
  return true;
}

std::vector<RationalVector> vertices(const RationalPolyhedron& p) {
  if (is_empty(p)) return {};
  if (!is_bounded(p)) throw PreconditionError("vertex enumeration needs a bounded polyhedron");
  const std::size_t dim = p.dim();
  if (dim == 0) return {RationalVector{}};
  cone::Matrix rows;
  for (const auto& c : p.constraints()) {
    RationalVector row(c.coefficients.begin(), c.coefficients.end());
    row.push_back(c.constant);
    rows.push_back(std::move(row));
  }
  RationalVector slack(dim + 1, 0);
  slack[dim] = 1;
  rows.push_back(std::move(slack));
  const auto rays = cone::extreme_rays(rows, dim + 1);
  if (!rays) throw std::logic_error("vertices: homogenised cone of a bounded polyhedron is not pointed");
  std::vector<RationalVector> out;
  for (const auto& ray : *rays) {
    if (sgn(ray[dim]) <= 0) continue;
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = ray[i] / ray[dim];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace alf
