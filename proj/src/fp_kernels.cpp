#include "unip/fp_kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "unip/error.hpp"

namespace unip::kernels {

namespace {

// Fixed moduli let the compiler turn x % P into multiply-shift sequences and
// vectorize the row updates; DynamicMod covers every other prime.
template <std::uint32_t P> struct StaticMod {
    constexpr std::uint32_t p() const noexcept { return P; }
    constexpr std::uint32_t reduce(std::uint32_t x) const noexcept { return x % P; }
};

struct DynamicMod {
    std::uint32_t value;
    std::uint32_t p() const noexcept { return value; }
    std::uint32_t reduce(std::uint32_t x) const noexcept { return x % value; }
};

template <class F> decltype(auto) with_modulus(std::uint32_t p, F &&f) {
    switch (p) {
    case 2:
        return f(StaticMod<2>{});
    case 3:
        return f(StaticMod<3>{});
    case 5:
        return f(StaticMod<5>{});
    case 7:
        return f(StaticMod<7>{});
    case 11:
        return f(StaticMod<11>{});
    case 13:
        return f(StaticMod<13>{});
    default:
        return f(DynamicMod{p});
    }
}

// dst[j] += c * src[j] for j in [0, n).
template <class Mod>
inline void axpy(std::uint32_t *__restrict dst, const std::uint32_t *__restrict src, std::uint32_t c,
                 std::size_t n, Mod mod) noexcept {
    for (std::size_t j = 0; j < n; ++j)
        dst[j] = mod.reduce(dst[j] + c * src[j]);
}

template <class Mod> std::size_t rank_impl(const FpMatrix &m, Mod mod, bool parallel) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint32_t> a = m.data();
    const std::uint32_t p = mod.p();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        std::uint32_t *prow = a.data() + rank * cols;
        const std::uint32_t inv = inverse_mod(prow[col], p);
        for (std::size_t j = col; j < cols; ++j)
            prow[j] = mod.reduce(prow[j] * inv);
        const std::size_t width = cols - col;
        const std::uint32_t *src = prow + col;
        const auto below = static_cast<std::ptrdiff_t>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && (rows - rank) * width > (1u << 15))
#endif
        for (std::ptrdiff_t r = static_cast<std::ptrdiff_t>(rank) + 1; r < below; ++r) {
            std::uint32_t *dst = a.data() + static_cast<std::size_t>(r) * cols + col;
            if (dst[0] != 0)
                axpy(dst, src, p - dst[0], width, mod);
        }
        ++rank;
    }
    (void)parallel;
    return rank;
}

template <class Mod> FpMatrix multiply_impl(const FpMatrix &a, const FpMatrix &b, Mod mod, bool parallel) {
    FpMatrix c(a.rows(), b.cols(), a.p());
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
    const std::size_t inner = a.cols(), width = b.cols();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel && a.rows() * inner * width > (1u << 18))
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::uint32_t *arow = a.row(static_cast<std::size_t>(i));
        std::uint32_t *crow = c.row(static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < inner; ++k)
            if (arow[k] != 0)
                axpy(crow, b.row(k), arow[k], width, mod);
    }
    (void)parallel;
    return c;
}

void check_product(const FpMatrix &a, const FpMatrix &b) {
    if (a.p() != b.p())
        throw DomainError("product of matrices over different primes");
    if (a.cols() != b.rows())
        throw DomainError("product of matrices with incompatible shapes");
}

} // namespace

std::size_t rank_serial(const FpMatrix &m) {
    return with_modulus(m.p(), [&](auto mod) { return rank_impl(m, mod, false); });
}

std::size_t rank_omp(const FpMatrix &m) {
    return with_modulus(m.p(), [&](auto mod) { return rank_impl(m, mod, true); });
}

FpMatrix multiply_serial(const FpMatrix &a, const FpMatrix &b) {
    check_product(a, b);
    return with_modulus(a.p(), [&](auto mod) { return multiply_impl(a, b, mod, false); });
}

FpMatrix multiply_omp(const FpMatrix &a, const FpMatrix &b) {
    check_product(a, b);
    return with_modulus(a.p(), [&](auto mod) { return multiply_impl(a, b, mod, true); });
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace unip::kernels
