#pragma once

#include <cstddef>

#include "unip/fp_matrix.hpp"

// Elimination and product kernels over GF(p). The serial versions are the
// reference implementation; the OpenMP versions must agree with them exactly
// and fall back to serial execution when OpenMP is unavailable.
namespace unip::kernels {

std::size_t rank_serial(const FpMatrix &m);
std::size_t rank_omp(const FpMatrix &m);

FpMatrix multiply_serial(const FpMatrix &a, const FpMatrix &b);
FpMatrix multiply_omp(const FpMatrix &a, const FpMatrix &b);

bool openmp_enabled() noexcept;
int max_threads() noexcept;

} // namespace unip::kernels
