// Times the OpenMP kernels against their serial references on inputs large
// enough for the parallel split to matter, and checks they agree.
#include "gvkit/chow_local.hpp"
#include "gvkit/graded_series.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

using namespace gvkit;

namespace {

template <class F> double millis(F &&f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i)
    f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

HalfLaurent random_series(std::mt19937 &rng, long q_order) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  HalfLaurent::Coeffs c;
  for (long k = -2; k <= q_order; ++k)
    if (int v = coeff(rng))
      c.emplace(units_of(k), v);
  return HalfLaurent::series(std::move(c), units_of(q_order));
}

GradedSeries random_graded(std::mt19937 &rng, const DegreeCutoff &cutoff,
                           long q_order) {
  GradedSeries s(cutoff);
  for (const auto &beta : cutoff.classes())
    s.add_term(beta, random_series(rng, q_order));
  return s;
}

} // namespace

int main() {
  std::mt19937 rng(20261016);
  std::printf("threads: %d\n", omp_get_max_threads());

  auto cutoff = DegreeCutoff::uniform(2, 10);
  GradedSeries a = random_graded(rng, cutoff, 12);
  GradedSeries b = random_graded(rng, cutoff, 12);
  bool same = gs_mul(a, b) == gs_mul_serial(a, b);
  double par = millis([&] { (void)gs_mul(a, b); }, 5);
  double ser = millis([&] { (void)gs_mul_serial(a, b); }, 5);
  std::printf("gs_mul     rank 2, bound 10, q^12: parallel %8.2f ms  serial "
              "%8.2f ms  agree=%s\n",
              par, ser, same ? "yes" : "NO");

  // Chow model: three generators, every cycle with total multiplicity <= 6.
  std::vector<ChowModel::Generator> gens{{"A", CurveClass{1, 0}},
                                         {"B", CurveClass{0, 1}},
                                         {"C", CurveClass{1, 1}}};
  std::vector<ChowModel::Point> points;
  std::uniform_int_distribution<long> euler(-3, 3);
  for (long i = 0; i <= 6; ++i)
    for (long j = 0; i + j <= 6; ++j)
      for (long k = 0; i + j + k <= 6; ++k)
        points.push_back({Cycle{i, j, k}, i + j + k == 0 ? 1 : euler(rng)});
  ChowModel model(gens, points);
  LocalFunction f, h;
  for (const auto &p : points) {
    f.add(p.cycle, random_series(rng, 10));
    h.add(p.cycle, random_series(rng, 10));
  }
  same = convolve(f, h, model) == convolve_serial(f, h, model);
  par = millis([&] { (void)convolve(f, h, model); }, 5);
  ser = millis([&] { (void)convolve_serial(f, h, model); }, 5);
  std::printf("convolve   %zu points, q^10:         parallel %8.2f ms  serial "
              "%8.2f ms  agree=%s\n",
              points.size(), par, ser, same ? "yes" : "NO");
  return 0;
}
