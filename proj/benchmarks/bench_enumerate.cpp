// Times the serial reference enumeration against the OpenMP engine and
// checks that both produce the same catalog.
//
//   bench_enumerate [max_len] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcw/verification.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<pcw::PclCatalog()>& run, int repeats,
               pcw::PclCatalog& last) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    last = run();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_len = argc > 1 ? std::atoi(argv[1]) : 16;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (max_len < 3 || repeats < 1) {
    std::fprintf(stderr, "usage: bench_enumerate [max_len>=3] [repeats>=1]\n");
    return 2;
  }

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif

  std::printf("enumerating perfectly clustering Lyndon words up to length %d (best of %d)\n",
              max_len, repeats);

  pcw::PclCatalog serial;
  const double serial_ms =
      time_ms([&] { return pcw::enumerate_pcl_serial(max_len); }, repeats, serial);
  std::printf("  %-22s %10.2f ms   %zu words\n", "serial reference", serial_ms,
              serial.entries.size());

  pcw::PclCatalog parallel;
  const double parallel_ms =
      time_ms([&] { return pcw::enumerate_pcl(max_len, 0); }, repeats, parallel);
  std::printf("  %-22s %10.2f ms   %zu words   (%d threads, speedup %.2fx)\n",
              "openmp subtree fanout", parallel_ms, parallel.entries.size(), threads,
              serial_ms / parallel_ms);

  if (serial.entries.size() != parallel.entries.size()) {
    std::fprintf(stderr, "catalog size mismatch: serial %zu vs parallel %zu\n",
                 serial.entries.size(), parallel.entries.size());
    return 1;
  }
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    if (!(serial.entries[i].word == parallel.entries[i].word)) {
      std::fprintf(stderr, "catalog mismatch at index %zu\n", i);
      return 1;
    }
  }
  std::printf("  catalogs identical\n");
  return 0;
}
