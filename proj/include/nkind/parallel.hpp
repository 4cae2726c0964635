#pragma once

#include <cstddef>
#include <exception>

namespace nkind {

// Execution mode for the sweep kernels. Serial is the reference path; both
// modes must produce identical output, so parallel callers write results
// into disjoint pre-sized slots.
enum class Exec { Serial, Parallel };

template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::Parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(nkind_for_each_index_err)
        {
          if (!err) err = std::current_exception();
        }
      }
    }
    if (err) std::rethrow_exception(err);
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

}  // namespace nkind
