#include "gvkit/lattice.hpp"

#include "gvkit/error.hpp"
#include "gvkit/rational.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gvkit {

namespace {
constexpr const char *kModule = "series_core";
}

std::string to_string(std::span<const long> coords) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords.size(); ++i)
    os << (i ? "," : "") << coords[i];
  os << ']';
  return os.str();
}

DegreeCutoff::DegreeCutoff(std::vector<long> weights, long bound)
    : weights_(std::move(weights)), bound_(bound) {
  if (weights_.empty())
    throw PreconditionError(kModule, "DegreeCutoff", "rank must be positive");
  for (long w : weights_)
    if (w <= 0)
      throw PreconditionError(kModule, "DegreeCutoff",
                              "weights must be strictly positive");
  if (bound_ < 0)
    throw PreconditionError(kModule, "DegreeCutoff", "negative bound");
}

DegreeCutoff DegreeCutoff::uniform(std::size_t rank, long bound) {
  return DegreeCutoff(std::vector<long>(rank, 1), bound);
}

long DegreeCutoff::degree(const CurveClass &beta) const {
  if (beta.rank() != rank())
    throw PreconditionError(kModule, "degree", "rank mismatch",
                            to_string(beta));
  long d = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    d += weights_[i] * beta[i];
  return d;
}

bool DegreeCutoff::admits(const CurveClass &beta) const {
  return beta.rank() == rank() && beta.is_effective() && degree(beta) <= bound_;
}

std::vector<CurveClass> DegreeCutoff::classes() const {
  std::vector<CurveClass> out;
  std::vector<long> cur(rank(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == rank()) {
      out.emplace_back(cur);
      return;
    }
    for (long c = 0; c * weights_[i] <= left; ++c) {
      cur[i] = c;
      rec(i + 1, left - c * weights_[i]);
    }
    cur[i] = 0;
  };
  rec(0, bound_);
  std::sort(out.begin(), out.end(),
            [this](const CurveClass &a, const CurveClass &b) {
              return precedes(a, b);
            });
  return out;
}

bool DegreeCutoff::precedes(const CurveClass &a, const CurveClass &b) const {
  long da = degree(a), db = degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

LatticeMap::LatticeMap(std::vector<std::vector<long>> rows)
    : rows_(std::move(rows)) {
  for (const auto &r : rows_)
    if (r.size() != rows_.size())
      throw PreconditionError(kModule, "LatticeMap", "matrix must be square");
  // Integer invertibility is checked by computing the inverse.
  (void)inverse();
}

LatticeMap LatticeMap::identity(std::size_t rank) {
  std::vector<std::vector<long>> rows(rank, std::vector<long>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i)
    rows[i][i] = 1;
  LatticeMap m;
  m.rows_ = std::move(rows);
  return m;
}

CurveClass LatticeMap::operator()(const CurveClass &beta) const {
  if (beta.rank() != rank())
    throw PreconditionError(kModule, "push_class", "rank mismatch",
                            to_string(beta));
  std::vector<long> out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      out[i] += rows_[i][j] * beta[j];
  return CurveClass(std::move(out));
}

LatticeMap LatticeMap::inverse() const {
  // Gauss-Jordan over Q, then require integrality.
  const std::size_t n = rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = rows_[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw PreconditionError(kModule, "LatticeMap", "matrix is singular");
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (auto &x : a[col])
      x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<long>> inv(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = to_long(a[i][n + j]);
      if (!v)
        throw PreconditionError(kModule, "LatticeMap",
                                "determinant is not +-1");
      inv[i][j] = *v;
    }
  LatticeMap m;
  m.rows_ = std::move(inv);
  return m;
}

LatticeMap LatticeMap::compose(const LatticeMap &other) const {
  if (other.rank() != rank())
    throw PreconditionError(kModule, "compose", "rank mismatch");
  const std::size_t n = rank();
  std::vector<std::vector<long>> out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] += rows_[i][k] * other.rows_[k][j];
  return LatticeMap(std::move(out));
}

bool in_span(const CurveClass &v, const std::vector<CurveClass> &basis) {
  // Row-reduce the basis, then reduce v against it.
  std::vector<std::vector<Rational>> rows;
  for (const auto &b : basis) {
    if (b.rank() != v.rank())
      throw PreconditionError("flop_transform", "in_span", "rank mismatch");
    rows.emplace_back(b.coords().begin(), b.coords().end());
  }
  std::vector<Rational> target(v.coords().begin(), v.coords().end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < v.rank() && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][col] == 0)
        continue;
      Rational f = rows[k][col] / rows[r][col];
      for (std::size_t j = 0; j < v.rank(); ++j)
        rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::size_t col = pivots[i];
    if (target[col] == 0)
      continue;
    Rational f = target[col] / rows[i][col];
    for (std::size_t j = 0; j < v.rank(); ++j)
      target[j] -= f * rows[i][j];
  }
  return std::all_of(target.begin(), target.end(),
                     [](const Rational &x) { return x == 0; });
}

} // namespace gvkit
