// bench.cpp: compares the serial reference against the OpenMP kernels on a
// film-propagation workload and a survey workload.
#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidseed/autgroup.hpp"
#include "braidseed/exchange.hpp"
#include "braidseed/plabic.hpp"

using namespace braidseed;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w;
  w.n = n;
  std::uniform_int_distribution<int> letter(1, n - 1);
  for (int i = 0; i < len; ++i) w.letters.push_back(letter(rng));
  return w;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif

  // Workload 1: propagation over long identity-braid diagrams (every column
  // a bridge, so the film count scales with the word length).
  {
    std::mt19937_64 rng(7);
    const int n = 8;
    const int len = 220;
    const int reps = 40;
    std::vector<PlabicDiagram> diagrams;
    for (int r = 0; r < reps; ++r)
      diagrams.push_back(build_diagram(Permutation(n), random_word(rng, n, len)));

    auto t0 = std::chrono::steady_clock::now();
    int64_t checksum_serial = 0;
    for (const PlabicDiagram& d : diagrams) {
      FilmSet films = propagate_films_serial(d);
      checksum_serial += films.f;
    }
    double serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    int64_t checksum_parallel = 0;
    for (const PlabicDiagram& d : diagrams) {
      FilmSet films = propagate_films(d);
      checksum_parallel += films.f;
    }
    double parallel = seconds_since(t0);

    std::printf("propagate_films   n=%d len=%d reps=%d   serial %.3fs   parallel %.3fs   speedup %.2fx\n",
                n, len, reps, serial, parallel, serial / parallel);
    if (checksum_serial != checksum_parallel) {
      std::printf("MISMATCH between serial and parallel film counts\n");
      return 1;
    }
  }

  // Workload 2: the survey kernel, serial (jobs=1) vs all cores.
  {
    SurveyOptions options;
    options.n = 3;
    options.min_len = 1;
    options.max_len = 9;

    options.jobs = 1;
    auto t0 = std::chrono::steady_clock::now();
    SurveyResult serial = survey(options);
    double serial_s = seconds_since(t0);

    options.jobs = 0;
    t0 = std::chrono::steady_clock::now();
    SurveyResult parallel = survey(options);
    double parallel_s = seconds_since(t0);

    std::printf("survey            n=3 len<=9 rows=%lld   serial %.3fs   parallel %.3fs   speedup %.2fx\n",
                static_cast<long long>(serial.emitted), serial_s, parallel_s, serial_s / parallel_s);
    if (serial.csv != parallel.csv) {
      std::printf("MISMATCH between serial and parallel survey output\n");
      return 1;
    }
  }
  return 0;
}
