#include "ssbnn/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ssbnn::kernels {

namespace {
// Row counts below this run serially; tiny matmuls are not worth a fork.
constexpr std::size_t kParallelCutoff = 16;
}  // namespace

bool parallel_enabled() {
#if defined(_OPENMP)
  return omp_get_max_threads() > 1;
#else
  return false;
#endif
}

namespace ref {

void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        acc += ai[p] * b[p * m + j];
      }
      ci[j] = acc;
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        acc += ai[p] * bj[p];
      }
      ci[j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < k; ++i) {
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        acc += a[p * k + i] * b[p * m + j];
      }
      ci[j] = acc;
    }
  }
}

}  // namespace ref

namespace omp {

void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        acc += ai[p] * b[p * m + j];
      }
      ci[j] = acc;
    }
  }
}

void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = a + i * k;
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      const double* bj = b + j * k;
      double acc = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        acc += ai[p] * bj[p];
      }
      ci[j] = acc;
    }
  }
}

void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < k; ++i) {
    double* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        acc += a[p * k + i] * b[p * m + j];
      }
      ci[j] = acc;
    }
  }
}

}  // namespace omp

void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  if (parallel_enabled() && n >= kParallelCutoff) {
    omp::matmul_nn(a, b, c, n, k, m);
  } else {
    ref::matmul_nn(a, b, c, n, k, m);
  }
}

void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  if (parallel_enabled() && n >= kParallelCutoff) {
    omp::matmul_nt(a, b, c, n, k, m);
  } else {
    ref::matmul_nt(a, b, c, n, k, m);
  }
}

void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m) {
  if (parallel_enabled() && k >= kParallelCutoff) {
    omp::matmul_tn(a, b, c, n, k, m);
  } else {
    ref::matmul_tn(a, b, c, n, k, m);
  }
}

namespace detail {

void parallel_for_impl(std::size_t n, void (*trampoline)(void*, std::size_t),
                       void* ctx) {
#if defined(_OPENMP)
  if (parallel_enabled() && n >= kParallelCutoff) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
      trampoline(ctx, i);
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) {
    trampoline(ctx, i);
  }
}

}  // namespace detail

}  // namespace ssbnn::kernels
