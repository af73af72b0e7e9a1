#pragma once

#include <cstddef>

// Dense double-precision primitives used by the recurrent model and the loss
// reductions. Scalar reference implementations are always available and act
// as the oracle; a SIMD variant (AVX2 on x86-64, NEON on aarch64) is selected
// once at runtime. The environment variable SURVSEQ_KERNELS=scalar|avx2|neon
// overrides autodetection.
namespace survseq::kernels {

enum class Isa { scalar, avx2, neon };

// Instruction set currently driving the dispatched entry points.
Isa active();
const char* name(Isa isa);

// Force a specific implementation (test hook). Throws std::runtime_error if
// the requested ISA is not compiled in or not supported by this CPU.
void force(Isa isa);

double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n); // y += alpha*x
void scale(double alpha, double* x, std::size_t n);                 // x *= alpha
double sum(const double* x, std::size_t n);
double sq_sum(const double* x, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sq_sum(const double* x, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sq_sum(const double* x, std::size_t n);
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sq_sum(const double* x, std::size_t n);
} // namespace neon
#endif

} // namespace survseq::kernels
