// Serial vs OpenMP batch evaluation of Steiner reports.
//
//   bench_batch [count] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <variant>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "steiner/batch.hpp"

namespace {

std::vector<steiner::TriangleInput> random_triangles(std::size_t n) {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::vector<steiner::TriangleInput> out;
  out.reserve(n);
  while (out.size() < n) {
    steiner::TriangleInput t{steiner::Complex{coord(rng), coord(rng)},
                             steiner::Complex{coord(rng), coord(rng)},
                             steiner::Complex{coord(rng), coord(rng)}};
    if (!steiner::is_collinear(t[0], t[1], t[2])) out.push_back(t);
  }
  return out;
}

template <typename Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 100000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
  const auto inputs = random_triangles(n);

  std::size_t ok_serial = 0, ok_parallel = 0;
  const double serial_ms = best_of(repeats, [&] {
    const auto r = steiner::evaluate_batch_serial(inputs);
    ok_serial = 0;
    for (const auto& e : r) ok_serial += std::holds_alternative<steiner::SteinerReport>(e);
  });
  const double parallel_ms = best_of(repeats, [&] {
    const auto r = steiner::evaluate_batch_parallel(inputs);
    ok_parallel = 0;
    for (const auto& e : r) ok_parallel += std::holds_alternative<steiner::SteinerReport>(e);
  });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("triangles: %zu  threads: %d  repeats: %d\n", n, threads, repeats);
  std::printf("serial:   %10.3f ms  (%zu ok)\n", serial_ms, ok_serial);
  std::printf("parallel: %10.3f ms  (%zu ok)\n", parallel_ms, ok_parallel);
  std::printf("speedup:  %10.2fx\n", serial_ms / parallel_ms);
  return ok_serial == ok_parallel ? 0 : 1;
}
