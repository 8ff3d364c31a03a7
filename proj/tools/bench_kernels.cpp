// Compares the serial reference kernels against the OpenMP ones and checks
// that both produce identical results while timing them.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qubatch/graph.hpp"
#include "qubatch/lattice.hpp"
#include "qubatch/oracle.hpp"

using namespace qubatch;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-36s %10.2f ms %10.2f ms %8.2fx  %s\n", name.c_str(), serial_ms,
              parallel_ms, serial_ms / parallel_ms, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif
  std::printf("%-36s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    const Ambient amb{2, 8};
    const uint64_t cap = 1'000'000;
    LatticeSlice serial, parallel;
    const double ts = time_ms([&] { serial = enumerate_subspaces(amb, 4, cap, Exec::serial); }, 3);
    const double tp = time_ms([&] { parallel = enumerate_subspaces(amb, 4, cap, Exec::parallel); }, 3);
    report("slice enumeration (2,8) dim 4", ts, tp, serial == parallel);
  }

  {
    IntersectionGraph serial, parallel;
    const double ts = time_ms([&] { serial = build_halfdim_graph(6, kDefaultCap, Exec::serial); }, 3);
    const double tp = time_ms([&] { parallel = build_halfdim_graph(6, kDefaultCap, Exec::parallel); }, 3);
    report("half-dim adjacency k=6 (1395 v)", ts, tp, serial.adj == parallel.adj);
  }

  {
    IntersectionGraph serial, parallel;
    const double ts = time_ms([&] { serial = build_bipartite_graph(7, 2, 2, kDefaultCap, Exec::serial); }, 3);
    const double tp = time_ms([&] { parallel = build_bipartite_graph(7, 2, 2, kDefaultCap, Exec::parallel); }, 3);
    report("bipartite adjacency k=7 m=2", ts, tp, serial.adj == parallel.adj);
  }

  {
    // full (Z_2)^3 lattice code, exhaustive subsets up to size 4
    const Ambient amb{2, 3};
    std::vector<Subspace> positions;
    for (const auto& slice : enumerate_lattice(amb)) {
      positions.insert(positions.end(), slice.subspaces.begin(), slice.subspaces.end());
    }
    const QuasiUniformCode code = build_code(SubgroupSystem(amb, std::move(positions)));
    oracle::UniformityResult serial, parallel;
    const double ts = time_ms(
        [&] { serial = oracle::check_quasi_uniform(code, 4, false, oracle::kDefaultSeed, 256, Exec::serial); }, 3);
    const double tp = time_ms(
        [&] { parallel = oracle::check_quasi_uniform(code, 4, false, oracle::kDefaultSeed, 256, Exec::parallel); }, 3);
    bool same = serial.reports.size() == parallel.reports.size();
    for (size_t i = 0; same && i < serial.reports.size(); ++i) {
      same = serial.reports[i].subset == parallel.reports[i].subset &&
             serial.reports[i].multiplicities == parallel.reports[i].multiplicities &&
             serial.reports[i].pass == parallel.reports[i].pass;
    }
    report("uniformity sweep n=14 |A|<=4", ts, tp, same);
  }

  return 0;
}
