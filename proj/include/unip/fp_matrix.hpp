#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace unip {

/// Dense row-major matrix over the prime field GF(p), entries in [0, p).
/// p must be prime and below 2^16 so that a + b*c never overflows 32 bits.
class FpMatrix {
  public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t p() const noexcept { return p_; }
    bool square() const noexcept { return rows_ == cols_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    // Stores v mod p.
    void set(std::size_t i, std::size_t j, std::int64_t v);

    std::uint32_t *row(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const std::uint32_t *row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
    const std::vector<std::uint32_t> &data() const noexcept { return data_; }

    bool is_zero() const noexcept;
    // this - I (square only).
    FpMatrix minus_identity() const;

    friend bool operator==(const FpMatrix &, const FpMatrix &) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

FpMatrix kron(const FpMatrix &a, const FpMatrix &b);
FpMatrix direct_sum(const FpMatrix &a, const FpMatrix &b);

// Rank and product, dispatched to the OpenMP kernels when built with OpenMP.
std::size_t rank(const FpMatrix &m);
FpMatrix multiply(const FpMatrix &a, const FpMatrix &b);

FpMatrix transpose(const FpMatrix &m);
// Throws DomainError when m is singular.
FpMatrix inverse(const FpMatrix &m);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

} // namespace unip
