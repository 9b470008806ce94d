#pragma once

#include <cstddef>

namespace cspace {

/// Worker budget for the data-parallel kernels. jobs == 1 selects the serial
/// reference path; jobs == 0 means "whatever OpenMP offers".
struct Exec {
  int jobs = 1;

  bool serial() const noexcept { return jobs == 1; }
};

/// Effective worker count for an Exec (always >= 1).
int resolve_jobs(const Exec& exec);

/// Whether the library was built with OpenMP.
bool have_openmp();

}  // namespace cspace
