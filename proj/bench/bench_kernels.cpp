// Timing comparison of the OpenMP kernels against their serial references.
// Not part of the test suite; build and run `bench_kernels` directly.

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "fading/simulator.hpp"
#include "fading/vmf.hpp"

using namespace fading;

namespace {

double checksum(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::abs(x);
  return s;
}

void bench_synthesis() {
  const VmfScattering scat(0.0, 0.0, 10.0);
  const MotionConfig motion(30.0, Direction3{1.0, 0.0, 0.0}, 0.125);
  const ChannelConfig config(256, 1.0, scat, motion, 0.0, 42);
  const auto real = realize(config);
  const double f_m = motion.max_doppler();
  const double dt = 1.0 / (64.0 * f_m);
  const double duration = 1.0e6 * dt;

  const double t0 = omp_get_wtime();
  const auto serial = synthesize_reference(real, duration, dt);
  const double t1 = omp_get_wtime();
  const auto parallel = synthesize(real, duration, dt);
  const double t2 = omp_get_wtime();

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < serial.size(); ++i)
    if (serial[i] != parallel[i]) ++mismatches;

  const double n = double(serial.size());
  std::printf("synthesize: %zu samples x %zu paths\n", serial.size(),
              real.amplitudes.size());
  std::printf("  serial   %8.3f s  (%.2f Msamples/s)\n", t1 - t0,
              n / (t1 - t0) / 1e6);
  std::printf("  openmp   %8.3f s  (%.2f Msamples/s, %d threads)\n", t2 - t1,
              n / (t2 - t1) / 1e6, omp_get_max_threads());
  std::printf("  speedup  %8.2fx, mismatching samples: %zu, checksum %.6e\n",
              (t1 - t0) / (t2 - t1), mismatches, checksum(parallel));
}

void bench_sampling() {
  const VmfScattering scat(0.3, -0.2, 5.0);
  const std::size_t n = 4000000;

  const double t0 = omp_get_wtime();
  const auto serial = sample_directions_reference(scat, n, 42);
  const double t1 = omp_get_wtime();
  const auto parallel = sample_directions(scat, n, 42);
  const double t2 = omp_get_wtime();

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (serial[i].x != parallel[i].x || serial[i].y != parallel[i].y ||
        serial[i].z != parallel[i].z)
      ++mismatches;

  std::printf("sample_directions: %zu draws\n", n);
  std::printf("  serial   %8.3f s  (%.2f Mdraws/s)\n", t1 - t0,
              double(n) / (t1 - t0) / 1e6);
  std::printf("  openmp   %8.3f s  (%.2f Mdraws/s, %d threads)\n", t2 - t1,
              double(n) / (t2 - t1) / 1e6, omp_get_max_threads());
  std::printf("  speedup  %8.2fx, mismatching draws: %zu\n",
              (t1 - t0) / (t2 - t1), mismatches);
}

}  // namespace

int main() {
  bench_synthesis();
  bench_sampling();
  return 0;
}
