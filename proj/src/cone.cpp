#include "alf/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

namespace alf::cone {

namespace {

// Row-echelon reduction; returns pivot rows in the order they were found.
std::vector<std::size_t> echelon_pivots(const Matrix& rows, std::size_t dim) {
  Matrix work;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw std::invalid_argument("cone: row length mismatch");
    RationalVector v = rows[i];
    // work is kept sorted by leading index, so one forward pass reduces v
    for (const auto& b : work) {
      std::size_t lead = 0;
      while (sgn(b[lead]) == 0) ++lead;
      if (sgn(v[lead]) == 0) continue;
      const Rational f = v[lead] / b[lead];
      for (std::size_t j = lead; j < dim; ++j) v[j] -= f * b[j];
    }
    if (is_zero(v)) continue;
    chosen.push_back(i);
    std::size_t lead = 0;
    while (sgn(v[lead]) == 0) ++lead;
    auto pos = std::find_if(work.begin(), work.end(), [&](const RationalVector& b) {
      std::size_t bl = 0;
      while (sgn(b[bl]) == 0) ++bl;
      return bl > lead;
    });
    work.insert(pos, std::move(v));
    if (chosen.size() == dim) break;
  }
  return chosen;
}

struct Ray {
  RationalVector x;
  boost::dynamic_bitset<> tight;
};

}  // namespace

std::size_t rank(const Matrix& rows, std::size_t dim) { return echelon_pivots(rows, dim).size(); }

std::vector<std::size_t> independent_rows(const Matrix& rows, std::size_t dim) {
  return echelon_pivots(rows, dim);
}

std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  const std::size_t n = a.size();
  Matrix m(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve: matrix is not square");
    std::copy(a[i].begin(), a[i].end(), m[i].begin());
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::optional<Matrix> extreme_rays(const Matrix& rows, std::size_t dim) {
  if (dim == 0) return Matrix{};
  const std::vector<std::size_t> basis = echelon_pivots(rows, dim);
  if (basis.size() < dim) return std::nullopt;
  const std::size_t m = rows.size();

  // Initial simplicial cone {x : A_B x >= 0}; its rays are the columns of A_B^{-1}.
  Matrix a_b;
  for (std::size_t i : basis) a_b.push_back(rows[i]);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector e(dim, 0);
    e[j] = 1;
    auto col = solve(a_b, e);
    if (!col) throw std::logic_error("extreme_rays: basis rows are singular");
    make_primitive(*col);
    Ray ray{std::move(*col), boost::dynamic_bitset<>(m)};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) ray.tight.set(basis[k]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(m, false);
  for (std::size_t i : basis) processed[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const RationalVector& row = rows[i];

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(row, rays[k].x);
      const int s = sgn(value[k]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
      if (s >= 0) {
        Ray kept = rays[k];
        if (s == 0) kept.tight.set(i);
        next.push_back(std::move(kept));
      }
    }
    if (neg.empty()) {
      rays = std::move(next);
      continue;
    }

    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
        if (dim >= 2 && common.count() < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t z = 0; z < rays.size() && adjacent; ++z) {
          if (z == p || z == q) continue;
          if (common.is_subset_of(rays[z].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{RationalVector(dim), common};
        for (std::size_t j = 0; j < dim; ++j)
          fresh.x[j] = value[p] * rays[q].x[j] - value[q] * rays[p].x[j];
        if (is_zero(fresh.x)) continue;
        make_primitive(fresh.x);
        fresh.tight.set(i);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  Matrix out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.x));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace alf::cone
