#include "gvkit/error.hpp"
#include "gvkit/genus_basis.hpp"

#include <doctest.h>

#include <random>

using namespace gvkit;

namespace {

HalfLaurent y(long k, long c = 1) { return HalfLaurent::monomial(c, units_of(k)); }

// q/(1+q)^2 = -q d/dq (1/(1+q)), so the q^k coefficient is (-1)^{k-1} k.
Rational plus_kernel_coeff(long k) {
  return Rational((k % 2 == 1) ? k : -k);
}

} // namespace

TEST_CASE("genus basis elements") {
  CHECK(genus_basis_element(0) == y(0));
  CHECK(genus_basis_element(1) == y(-1) + y(0, 2) + y(1));
  CHECK(genus_basis_element(2) ==
        y(-2) + y(-1, 4) + y(0, 6) + y(1, 4) + y(2));
  CHECK_THROWS_AS(genus_basis_element(-1), PreconditionError);
}

TEST_CASE("decompose and recompose") {
  CHECK(decompose_symmetric(y(-1) + y(0, 2) + y(1)) ==
        GenusVector{{{1, 1}}});
  // Nodal fiber stalk y^-1 + 1 + y = (y+2+y^-1) - 1.
  CHECK(decompose_symmetric(y(-1) + y(0) + y(1)) ==
        GenusVector{{{0, -1}, {1, 1}}});
  CHECK(decompose_symmetric(HalfLaurent{}).empty());
  CHECK_THROWS_AS(decompose_symmetric(y(1)), PreconditionError);
  CHECK_THROWS_AS(decompose_symmetric(HalfLaurent::polynomial({{1, 1}, {-1, 1}})),
                  PreconditionError);
  CHECK_THROWS_AS(decompose_symmetric(y(-1) * ratio(1, 2) + y(1) * ratio(1, 2)),
                  IntegralityError);

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> v(-9, 9);
  for (int i = 0; i < 200; ++i) {
    GenusVector n;
    for (long g = 0; g <= 4; ++g)
      n.add(g, v(rng));
    CHECK(decompose_symmetric(recompose(n)) == n);
  }
}

TEST_CASE("evaluation at y = -1 picks out genus zero") {
  GenusVector n{{{0, 5}, {1, -3}, {3, 7}}};
  CHECK(eval_minus_one(recompose(n)) == 5);
  CHECK(eval_minus_one(y(1) + y(2)) == 0);
}

TEST_CASE("plus kernel against the differentiated geometric series") {
  CHECK(kernel_plus(1, 5) == y(0));
  CHECK(kernel_plus(3, 5) == genus_basis_element(2));
  HalfLaurent k0 = kernel_plus(0, 8);
  for (long k = 1; k <= 8; ++k)
    CHECK(k0.coeff(units_of(k)) == plus_kernel_coeff(k));
  CHECK(k0.coeff(0) == 0);
  // (q/(1+q)^2)^2 by squaring the oracle coefficients directly.
  HalfLaurent km1 = kernel_plus(-1, 8);
  for (long k = 2; k <= 8; ++k) {
    Rational expect = 0;
    for (long i = 1; i < k; ++i)
      expect += plus_kernel_coeff(i) * plus_kernel_coeff(k - i);
    CHECK(km1.coeff(units_of(k)) == expect);
  }
}

TEST_CASE("minus kernels") {
  CHECK(kernel_minus(1, 2, 5) == y(0));
  CHECK(kernel_minus(2, 2, 5) == y(-2) + y(0, -2) + y(2));
  HalfLaurent k = kernel_minus(0, 1, 7);
  for (long j = 1; j <= 7; ++j)
    CHECK(k.coeff(units_of(j)) == j);
  HalfLaurent k2 = kernel_minus(0, 2, 8);
  for (long j = 1; j <= 8; ++j)
    CHECK(k2.coeff(units_of(j)) == (j % 2 == 0 ? j / 2 : 0));
  CHECK_THROWS_AS(kernel_minus(0, 0, 4), PreconditionError);
}

TEST_CASE("local minus kernel is the plus kernel up to sign") {
  for (long g = -3; g <= 4; ++g) {
    HalfLaurent lhs = kernel_minus_local(g, 1, 10) * Rational(g % 2 == 0 ? -1 : 1);
    CHECK(lhs.agrees_with(kernel_plus(g, 10)));
  }
}

TEST_CASE("genus extraction") {
  // L = (q - 2 + q^-1) - q/(1-q)^2 with the (-1)^{g-1} tag.
  HalfLaurent l = y(1) + y(0, -2) + y(-1) - kernel_minus(0, 1, 10);
  CHECK(extract_genus_from_qseries(l, {0, 3}) == GenusVector{{{2, -1}, {0, 1}}});

  CHECK_THROWS_AS(extract_genus_from_qseries(y(3), {0, 1}), ResidualError);
  CHECK_THROWS_AS(extract_genus_from_qseries(y(1), {0, 3}), ResidualError);
  CHECK_THROWS_AS(extract_genus_from_qseries(kernel_minus(-2, 1, 2), {-3, 3}),
                  WindowError);
  CHECK_THROWS_AS(
      extract_genus_from_qseries(kernel_minus(0, 1, 6) * ratio(1, 2), {0, 2}),
      IntegralityError);

  std::mt19937 rng(5);
  std::uniform_int_distribution<long> v(-6, 6);
  for (int i = 0; i < 200; ++i) {
    GenusVector n;
    for (long g = -3; g <= 3; ++g)
      n.add(g, v(rng));
    CHECK(extract_genus_from_qseries(tagged_kernel_sum(n, 12), {-3, 3}) == n);
  }
}
