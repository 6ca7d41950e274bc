#pragma once

#include <cstddef>

// Dense kernels behind all tensor numerics. Each kernel comes in a serial
// reference form (ref namespace) and an OpenMP form parallelised over output
// rows. Every output element is accumulated in the same fixed index order in
// both forms, so the parallel results are bitwise identical to the reference
// for any thread count. The unqualified entry points dispatch at runtime.
namespace ssbnn::kernels {

// C[n x m] = A[n x k] * B[k x m]
void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
// C[n x m] = A[n x k] * B[m x k]^T
void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
// C[k x m] = A[n x k]^T * B[n x m]
void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);

namespace ref {
void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
}  // namespace ref

namespace omp {
void matmul_nn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
void matmul_nt(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
void matmul_tn(const double* a, const double* b, double* c, std::size_t n,
               std::size_t k, std::size_t m);
}  // namespace omp

// True when the build has OpenMP and more than one thread is available.
bool parallel_enabled();

// Runs fn(i) for i in [0, n). Parallel when worthwhile; each index is
// processed exactly once by exactly one thread, so deterministic workloads
// stay deterministic. fn must not touch state shared across indices.
template <typename Fn>
void parallel_for(std::size_t n, const Fn& fn);

namespace detail {
void parallel_for_impl(std::size_t n, void (*trampoline)(void*, std::size_t),
                       void* ctx);
}

template <typename Fn>
void parallel_for(std::size_t n, const Fn& fn) {
  detail::parallel_for_impl(
      n,
      [](void* ctx, std::size_t i) { (*static_cast<const Fn*>(ctx))(i); },
      const_cast<void*>(static_cast<const void*>(&fn)));
}

}  // namespace ssbnn::kernels
