#pragma once

#include "gvkit/chow_local.hpp"
#include "gvkit/half_laurent.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gvkit {

/// Per cycle point, the symmetric polynomial sum_i chi(pH^i) y^i.
struct PerverseDatum {
  std::map<Cycle, HalfLaurent> values;
  bool operator==(const PerverseDatum &) const = default;
};

/// Pointwise genus decomposition of a perverse datum.
LocalGVTable gv_from_perverse(const PerverseDatum &d);

/// (i, j) position on a spectral page.
using PageIndex = std::pair<long, long>;

/// E_1 dimensions and the ranks of d_1 : E_1^{i,j} -> E_1^{i+1,j}.
struct SpectralPage {
  std::map<PageIndex, long> e1;
  std::map<PageIndex, long> d1_ranks;
};

/// dim E_2^{i,j} = dim E_1^{i,j} - rank(i,j) - rank(i-1,j). The sequence
/// degenerates at E_2, so this is also E_infinity.
std::map<PageIndex, long> e2_from_e1(const SpectralPage &page);

/// One summand of a weight-graded pushforward: the Euler polynomial in y of
/// a perverse summand supported over `point`, sitting in weight `weight`.
struct Summand {
  std::string label;
  Cycle point;
  HalfLaurent poly;
  long weight = 0;
};
using SummandTable = std::vector<Summand>;
using RankTable = std::map<Cycle, std::map<PageIndex, long>>;

enum class AssemblyMode { pure, weight_filtered };

/// E_1 page at one point: a y^m coefficient c of a weight-w summand adds c
/// to E_1^{-w, m+w}.
SpectralPage e1_page(const SummandTable &summands, const Cycle &point,
                     const std::map<PageIndex, long> &ranks = {});

/// Pure mode sums summand polynomials pointwise. Weight-filtered mode builds
/// the E_1 page at each point, applies the given d_1 ranks and reads the
/// polynomial off E_2.
PerverseDatum assemble_datum(const SummandTable &summands, AssemblyMode mode,
                             const RankTable &ranks = {});

struct BehrendStratum {
  long euler = 0;
  long nu = 0;
};

/// sum e * nu: the genus-zero invariant as a Behrend-weighted Euler
/// characteristic.
long behrend_euler_check(std::span<const BehrendStratum> strata);

struct VersalCheck {
  bool holds = false;
  HalfLaurent residual;
};

/// Compares sum_n e_n q^{n+1-g} with q/(1+q)^2 * J(q) through q^{q_order},
/// where J is the Jacobian datum read as a polynomial in q.
VersalCheck versal_identity_check(std::span<const long> hilb,
                                  const HalfLaurent &jac, long g,
                                  long q_order);

/// Hilbert-scheme Euler numbers e_0..e_count-1 forced by a Jacobian datum.
std::vector<long> versal_hilbert_numbers(const HalfLaurent &jac, long g,
                                         long count);

} // namespace gvkit
