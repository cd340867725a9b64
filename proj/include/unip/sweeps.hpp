#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace unip {

enum class Exec { Serial, Parallel };

/// Outcome of an exhaustive comparison over a parameter grid.
struct SweepReport {
    std::size_t cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const noexcept { return mismatches.empty(); }
};

// tensor_jordan(m, n, p) against kron(J_m, J_n) ranks, 1 <= m <= n <= p.
SweepReport sweep_tensor(const std::vector<std::int64_t> &primes, Exec exec = Exec::Parallel);

// weyl_jordan(m, p) against the Pascal matrix, 0 <= m <= max_m.
SweepReport sweep_weyl(std::int64_t max_m, const std::vector<std::int64_t> &primes, Exec exec = Exec::Parallel);

// irrep_jordan(lambda, p) against the Kronecker-Pascal oracle for every lambda
// < p^max_digits with dim L(lambda) <= dim_cap, plus one representative per
// multiset of nonzero digits. Oracle results are shared between weights with
// the same digit multiset. Matrices of dimension <= dense_cap go through the
// dense oracle as well and must agree with the block-reduced one.
SweepReport sweep_irrep(std::int64_t dim_cap, const std::vector<std::int64_t> &primes, int max_digits,
                        std::int64_t dense_cap, Exec exec = Exec::Parallel);

// Symmetry and vanishing self-extensions of ext1_nonzero on [0, max_weight]^2.
SweepReport sweep_ext(std::int64_t max_weight, const std::vector<std::int64_t> &primes, Exec exec = Exec::Parallel);

} // namespace unip
