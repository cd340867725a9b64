#include "unip/fp_matrix.hpp"

#include <algorithm>

#include "unip/error.hpp"
#include "unip/fp_kernels.hpp"
#include "unip/primes.hpp"

namespace unip {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p) {
    require_prime(p);
    if (p >= (1u << 16))
        throw DomainError("FpMatrix supports primes below 65536");
    data_.assign(rows * cols, 0);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    data_[i * cols_ + j] = static_cast<std::uint32_t>(r);
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix FpMatrix::minus_identity() const {
    if (!square())
        throw DomainError("minus_identity needs a square matrix");
    FpMatrix m = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
        auto &x = m.data_[i * cols_ + i];
        x = (x + p_ - 1) % p_;
    }
    return m;
}

FpMatrix kron(const FpMatrix &a, const FpMatrix &b) {
    if (a.p() != b.p())
        throw DomainError("kron of matrices over different primes");
    FpMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
    const auto p = a.p();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto x = a(i, j);
            if (x == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                auto *dst = out.row(i * b.rows() + k) + j * b.cols();
                const auto *src = b.row(k);
                for (std::size_t l = 0; l < b.cols(); ++l)
                    dst[l] = (x * src[l]) % p;
            }
        }
    return out;
}

FpMatrix direct_sum(const FpMatrix &a, const FpMatrix &b) {
    if (a.p() != b.p())
        throw DomainError("direct sum of matrices over different primes");
    FpMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    for (std::size_t i = 0; i < a.rows(); ++i)
        std::copy_n(a.row(i), a.cols(), out.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i)
        std::copy_n(b.row(i), b.cols(), out.row(a.rows() + i) + a.cols());
    return out;
}

std::size_t rank(const FpMatrix &m) { return kernels::rank_omp(m); }

FpMatrix multiply(const FpMatrix &a, const FpMatrix &b) { return kernels::multiply_omp(a, b); }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const auto q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw DomainError("element is not invertible mod p");
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

} // namespace unip

namespace unip {

FpMatrix transpose(const FpMatrix &m) {
    FpMatrix t(m.cols(), m.rows(), m.p());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.row(j)[i] = m(i, j);
    return t;
}

FpMatrix inverse(const FpMatrix &m) {
    if (!m.square())
        throw DomainError("inverse needs a square matrix");
    const std::size_t n = m.rows();
    const std::uint32_t p = m.p();
    FpMatrix a = m;
    FpMatrix inv = FpMatrix::identity(n, p);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw DomainError("matrix is singular");
        if (pivot != col) {
            std::swap_ranges(a.row(pivot), a.row(pivot) + n, a.row(col));
            std::swap_ranges(inv.row(pivot), inv.row(pivot) + n, inv.row(col));
        }
        const auto s = inverse_mod(a(col, col), p);
        for (std::size_t j = 0; j < n; ++j) {
            a.row(col)[j] = (a.row(col)[j] * s) % p;
            inv.row(col)[j] = (inv.row(col)[j] * s) % p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const auto f = a(r, col);
            if (r == col || f == 0)
                continue;
            const auto c = p - f;
            for (std::size_t j = 0; j < n; ++j) {
                a.row(r)[j] = (a.row(r)[j] + c * a.row(col)[j]) % p;
                inv.row(r)[j] = (inv.row(r)[j] + c * inv.row(col)[j]) % p;
            }
        }
    }
    return inv;
}

} // namespace unip
