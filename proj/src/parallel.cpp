#include "cspace/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cspace {

int resolve_jobs(const Exec& exec) {
  if (exec.jobs >= 1) return exec.jobs;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool have_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace cspace
