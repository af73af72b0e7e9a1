#include "survseq/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace survseq::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sq_sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

} // namespace scalar

namespace {

struct Table {
    Isa isa;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    double (*sq_sum)(const double*, std::size_t);
};

constexpr Table kScalarTable{Isa::scalar, scalar::dot,  scalar::axpy,
                             scalar::scale, scalar::sum, scalar::sq_sum};

Table make_table(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2:
        if (!avx2::supported()) throw std::runtime_error("kernels: avx2 not supported by this CPU");
        return Table{Isa::avx2, avx2::dot, avx2::axpy, avx2::scale, avx2::sum, avx2::sq_sum};
#endif
#if defined(__aarch64__)
    case Isa::neon:
        return Table{Isa::neon, neon::dot, neon::axpy, neon::scale, neon::sum, neon::sq_sum};
#endif
    default:
        throw std::runtime_error(std::string("kernels: '") + name(isa) + "' not compiled into this build");
    }
}

Table autodetect() {
    if (const char* env = std::getenv("SURVSEQ_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return make_table(Isa::scalar);
        if (std::strcmp(env, "avx2") == 0) return make_table(Isa::avx2);
        if (std::strcmp(env, "neon") == 0) return make_table(Isa::neon);
        throw std::runtime_error(std::string("kernels: unknown SURVSEQ_KERNELS value '") + env + "'");
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2::supported()) return make_table(Isa::avx2);
#elif defined(__aarch64__)
    return make_table(Isa::neon);
#endif
    return kScalarTable;
}

Table& dispatch() {
    static Table table = autodetect();
    return table;
}

} // namespace

Isa active() { return dispatch().isa; }

const char* name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "?";
}

void force(Isa isa) { dispatch() = make_table(isa); }

double dot(const double* a, const double* b, std::size_t n) { return dispatch().dot(a, b, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) { dispatch().axpy(alpha, x, y, n); }
void scale(double alpha, double* x, std::size_t n) { dispatch().scale(alpha, x, n); }
double sum(const double* x, std::size_t n) { return dispatch().sum(x, n); }
double sq_sum(const double* x, std::size_t n) { return dispatch().sq_sum(x, n); }

} // namespace survseq::kernels
