#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gvkit {

/// Integer vector with value semantics. The tag keeps curve classes and
/// cycle multiplicity vectors from being mixed up.
template <class Tag> class IntVector {
public:
  IntVector() = default;
  explicit IntVector(std::vector<long> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<long> coords) : coords_(coords) {}

  static IntVector zero(std::size_t rank) {
    return IntVector(std::vector<long>(rank, 0));
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  std::span<const long> coords() const noexcept { return coords_; }
  long operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    for (long c : coords_)
      if (c != 0)
        return false;
    return true;
  }
  bool is_effective() const {
    for (long c : coords_)
      if (c < 0)
        return false;
    return true;
  }
  long total() const {
    long s = 0;
    for (long c : coords_)
      s += c;
    return s;
  }

  IntVector &operator+=(const IntVector &o) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] += o.coords_[i];
    return *this;
  }
  IntVector &operator-=(const IntVector &o) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      coords_[i] -= o.coords_[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector &b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector &b) { return a -= b; }
  friend IntVector operator*(long k, IntVector a) {
    for (auto &c : a.coords_)
      c *= k;
    return a;
  }
  friend IntVector operator-(IntVector a) { return -1 * std::move(a); }

  /// The v with k*v == *this, if it exists.
  std::optional<IntVector> divided_by(long k) const {
    IntVector out = *this;
    for (auto &c : out.coords_) {
      if (c % k != 0)
        return std::nullopt;
      c /= k;
    }
    return out;
  }

  /// Componentwise <= .
  bool dominated_by(const IntVector &o) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] > o.coords_[i])
        return false;
    return true;
  }

  auto operator<=>(const IntVector &) const = default;

private:
  std::vector<long> coords_;
};

struct CurveClassTag {};
struct CycleTag {};

/// Curve class in H_2 modeled as Z^r; effective iff all coordinates >= 0.
using CurveClass = IntVector<CurveClassTag>;
/// One-cycle as multiplicities over the generators of a Chow model.
using Cycle = IntVector<CycleTag>;

std::string to_string(std::span<const long> coords);
template <class Tag> std::string to_string(const IntVector<Tag> &v) {
  return to_string(v.coords());
}

/// Positive linear functional plus bound; admits finitely many effective
/// classes.
class DegreeCutoff {
public:
  DegreeCutoff() = default;
  DegreeCutoff(std::vector<long> weights, long bound);

  /// All weights 1.
  static DegreeCutoff uniform(std::size_t rank, long bound);

  std::size_t rank() const noexcept { return weights_.size(); }
  const std::vector<long> &weights() const noexcept { return weights_; }
  long bound() const noexcept { return bound_; }

  long degree(const CurveClass &beta) const;
  bool admits(const CurveClass &beta) const;

  /// Every effective class with degree <= bound, in monoid order: by degree,
  /// ties broken lexicographically. The zero class comes first.
  std::vector<CurveClass> classes() const;

  /// Strict total order refining the monoid order.
  bool precedes(const CurveClass &a, const CurveClass &b) const;

  bool operator==(const DegreeCutoff &) const = default;

private:
  std::vector<long> weights_;
  long bound_ = 0;
};

/// Square integer matrix with determinant +-1, acting on column vectors.
class LatticeMap {
public:
  LatticeMap() = default;
  explicit LatticeMap(std::vector<std::vector<long>> rows);

  static LatticeMap identity(std::size_t rank);

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::vector<long>> &rows() const noexcept { return rows_; }

  CurveClass operator()(const CurveClass &beta) const;
  LatticeMap inverse() const;
  /// (this * other)(v) = this(other(v)).
  LatticeMap compose(const LatticeMap &other) const;

  bool operator==(const LatticeMap &) const = default;

private:
  std::vector<std::vector<long>> rows_;
};

/// Whether v lies in the rational span of the basis vectors.
bool in_span(const CurveClass &v, const std::vector<CurveClass> &basis);

} // namespace gvkit
