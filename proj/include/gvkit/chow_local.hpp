#pragma once

#include "gvkit/genus_basis.hpp"
#include "gvkit/half_laurent.hpp"
#include "gvkit/lattice.hpp"
#include "gvkit/transforms.hpp"

#include <map>
#include <string>
#include <vector>

namespace gvkit {

/// Finite Euler-weighted model of the Chow variety. Each point stands for a
/// stratum of one-cycles, recorded as multiplicities over irreducible
/// generators together with the stratum's Euler characteristic.
class ChowModel {
public:
  struct Generator {
    std::string label;
    CurveClass curve_class;
  };
  struct Point {
    Cycle cycle;
    long euler = 1;
  };

  ChowModel() = default;
  ChowModel(std::vector<Generator> generators, std::vector<Point> points);

  const std::vector<Generator> &generators() const noexcept { return generators_; }
  const std::vector<Point> &points() const noexcept { return points_; }
  std::size_t class_rank() const noexcept { return class_rank_; }

  bool contains(const Cycle &c) const { return index_.count(c) != 0; }
  long euler(const Cycle &c) const;
  CurveClass class_of(const Cycle &c) const;
  Cycle zero_cycle() const { return Cycle::zero(generators_.size()); }

  /// Points ordered by total multiplicity, then lexicographically.
  std::vector<Cycle> ordered_cycles() const;
  long max_multiplicity() const;

private:
  std::vector<Generator> generators_;
  std::vector<Point> points_;
  std::map<Cycle, std::size_t> index_;
  std::size_t class_rank_ = 0;
};

/// Finitely supported function from model points to HalfLaurent values.
struct LocalFunction {
  std::map<Cycle, HalfLaurent> values;

  const HalfLaurent &at(const Cycle &c) const;
  void add(const Cycle &c, const HalfLaurent &v);
  static LocalFunction delta(const Cycle &c, HalfLaurent v = HalfLaurent::constant(1));
  bool operator==(const LocalFunction &) const = default;
};

/// (cycle, g) -> n^loc_{g,cycle}.
struct LocalGVTable {
  std::map<Cycle, GenusVector> entries;

  long at(const Cycle &c, long g) const;
  void add(const Cycle &c, long g, long n);
  bool empty() const { return entries.empty(); }
  bool operator==(const LocalGVTable &) const = default;
};

/// What to do when a sum of cycles leaves the model's point set.
enum class OutsideModel { truncate, error };

/// Euler-weighted pushforward along cycle addition, parallel over the
/// model's points:
/// (f.h)(c) = sum_{c1+c2=c} e(c1) e(c2) f(c1) h(c2).
LocalFunction convolve(const LocalFunction &f, const LocalFunction &h,
                       const ChowModel &model,
                       OutsideModel outside = OutsideModel::truncate);
/// Reference implementation of convolve over support pairs.
LocalFunction convolve_serial(const LocalFunction &f, const LocalFunction &h,
                              const ChowModel &model,
                              OutsideModel outside = OutsideModel::truncate);

/// Logarithm with respect to convolve; F must be exactly 1 at the zero cycle.
LocalFunction conv_log(const LocalFunction &f, const ChowModel &model);
/// Exponential with respect to convolve; F must vanish at the zero cycle.
LocalFunction conv_exp(const LocalFunction &f, const ChowModel &model);

/// (k)_* f: the value at c' is the sum of f(c) over k c = c'.
LocalFunction push_multiple(const LocalFunction &f, long k,
                            const ChowModel &model,
                            OutsideModel outside = OutsideModel::error);

/// Local stable-pair function from local GV data:
/// log F = sum (k)_* (n_{g,-}/k) (-1)^{g-1} K_g,k where K uses (-q) under
/// the local_minus_q convention and q under global_q.
LocalFunction local_pt_from_gv(const LocalGVTable &n, const ChowModel &model,
                               long q_order,
                               Convention convention = Convention::local_minus_q);
LocalGVTable local_gv_from_pt(const LocalFunction &p, const ChowModel &model,
                              GenusRange range,
                              Convention convention = Convention::local_minus_q);

/// sum_points euler * f, grouped by pushed curve class.
std::map<CurveClass, HalfLaurent> integrate_chow(const LocalFunction &f,
                                                 const ChowModel &model);
std::map<CurveClass, GenusVector> integrate_chow(const LocalGVTable &n,
                                                 const ChowModel &model);
/// Integrated local table as a global GV table (zero class dropped).
GVTable integrate_to_gv(const LocalGVTable &n, const ChowModel &model);

} // namespace gvkit
