// Serial vs OpenMP timings for the sweep kernels.

#include <chrono>
#include <cstdio>

#include "nkind/families.hpp"
#include "nkind/gamma.hpp"
#include "nkind/group.hpp"
#include "nkind/swan.hpp"
#include "nkind/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_once(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-44s %8.3f s %8.3f s %6.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial\n");
#endif
  std::printf("%-44s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    nkind::FiniteGroup g = nkind::make_group("sym:5");
    double s = time_once([&] { nkind::subgroup_classes(g, nkind::Exec::Serial); });
    double p = time_once([&] { nkind::subgroup_classes(g, nkind::Exec::Parallel); });
    row("subgroup lattice + classes, sym:5", s, p);
  }
  {
    nkind::FiniteGroup g = nkind::make_group("dihedral:60");
    double s = time_once([&] { nkind::subgroup_classes(g, nkind::Exec::Serial); });
    double p = time_once([&] { nkind::subgroup_classes(g, nkind::Exec::Parallel); });
    row("subgroup lattice + classes, dihedral:60", s, p);
  }
  {
    nkind::FiniteGroup g = nkind::make_group("cyclic:36");
    double s = time_once([&] { nkind::classify_all(g, 5, 3, nkind::Exec::Serial); });
    double p = time_once([&] { nkind::classify_all(g, 5, 3, nkind::Exec::Parallel); });
    row("classification sweep, cyclic:36 @ p=5, M=3", s, p);
  }
  {
    double s = time_once([&] { nkind::check_goursat_counts(nkind::Exec::Serial); });
    double p = time_once([&] { nkind::check_goursat_counts(nkind::Exec::Parallel); });
    row("product enumeration vs brute force", s, p);
  }
  {
    double s = time_once(
        [&] { nkind::check_elementarity_corpus(200, {2, 3, 5}, nkind::Exec::Serial); });
    double p = time_once(
        [&] { nkind::check_elementarity_corpus(200, {2, 3, 5}, nkind::Exec::Parallel); });
    row("elementarity corpus sweep, bound 200", s, p);
  }
  {
    double s = time_once([&] { nkind::check_families_bruteforce(48, nkind::Exec::Serial); });
    double p = time_once([&] { nkind::check_families_bruteforce(48, nkind::Exec::Parallel); });
    row("detector vs structure search, bound 48", s, p);
  }
  {
    double s = time_once([&] { nkind::check_dress_roundtrip(48, nkind::Exec::Serial); });
    double p = time_once([&] { nkind::check_dress_roundtrip(48, nkind::Exec::Parallel); });
    row("certificate round-trip, bound 48", s, p);
  }
  return 0;
}
