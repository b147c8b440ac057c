#pragma once

#include "gvkit/half_laurent.hpp"

#include <map>
#include <optional>

namespace gvkit {

/// g -> n_g with finite support. Negative genera only occur on the
/// stable-pair side.
struct GenusVector {
  std::map<long, long> entries;

  long at(long g) const {
    auto it = entries.find(g);
    return it == entries.end() ? 0 : it->second;
  }
  void add(long g, long n) {
    if (n == 0)
      return;
    if ((entries[g] += n) == 0)
      entries.erase(g);
  }
  bool empty() const { return entries.empty(); }
  bool operator==(const GenusVector &) const = default;
};

/// The two sign conventions for the stable-pair variable: q-kernels with
/// (-q)^n on the generating side, or (-q)-kernels with q^n.
enum class Convention { global_q, local_minus_q };

/// (y^{1/2} + y^{-1/2})^{2g} = (y + 2 + y^{-1})^g as a polynomial.
HalfLaurent genus_basis_element(long g);

/// P = sum_g n_g (y^{1/2}+y^{-1/2})^{2g}; P must be a symmetric
/// integer-exponent polynomial with integral coordinates in this basis.
GenusVector decompose_symmetric(const HalfLaurent &p);
HalfLaurent recompose(const GenusVector &n);
Rational eval_minus_one(const HalfLaurent &p);

/// (q^{1/2}+q^{-1/2})^{2g-2}; for g <= 0 the q-expansion exact through
/// q^{q_order}.
HalfLaurent kernel_plus(long g, long q_order);
/// (q^{k/2}-q^{-k/2})^{2g-2}; for g <= 0 the expansion
/// q^{k(1-g)} (1-q^k)^{2g-2} exact through q^{q_order}.
HalfLaurent kernel_minus(long g, long k, long q_order);

/// kernel_minus with q -> -q.
HalfLaurent kernel_minus_local(long g, long k, long q_order);

/// Genera to extract. Without `min`, negative genera are resolved as deep as
/// the window determines them; with it, a window too shallow to reach `min`
/// is an error.
struct GenusRange {
  std::optional<long> min;
  long max = 3;
};

/// Inverts L = sum_{g in range} n_g (-1)^{g-1} (q^{1/2}-q^{-1/2})^{2g-2}.
/// Throws ResidualError if L is not of that form within its window, and
/// WindowError if the window cannot resolve the lower end of the range.
GenusVector extract_genus_from_qseries(const HalfLaurent &l, GenusRange range);

/// sum_g n_g (-1)^{g-1} (q^{1/2}-q^{-1/2})^{2g-2} through q^{q_order}.
HalfLaurent tagged_kernel_sum(const GenusVector &n, long q_order);

} // namespace gvkit
