#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unip/fp_matrix.hpp"
#include "unip/jordan_type.hpp"
#include "unip/module_expr.hpp"

namespace unip {

// Matrix of u on the m-th symmetric power of the natural module:
// entry (i, j) = binom(j, i) mod p, 0 <= i <= j <= m.
FpMatrix pascal_matrix(std::int64_t m, std::uint32_t p);

// A single full Jordan block J_size (ones on the diagonal and superdiagonal).
FpMatrix jordan_block_matrix(std::int64_t size, std::uint32_t p);

// Block-diagonal matrix realizing a Jordan type.
FpMatrix jordan_type_matrix(const JordanType &t, std::uint32_t p);

/// ranks[k] = rank (M - I)^k for k = 0 .. p (ranks[0] = n). The number of
/// blocks of size >= k is ranks[k-1] - ranks[k].
struct RankProfile {
    std::vector<std::size_t> ranks;
    JordanType jordan;
};

// Throws DomainError unless M is square with (M - I)^p = 0.
RankProfile rank_profile(const FpMatrix &m);
JordanType jordan_type_of_unipotent(const FpMatrix &m);

// Dense builds the whole matrix of u on the expression and takes ranks.
// BlockReduced takes the Jordan type of every atom from its dense matrix and
// resolves each tensor node block pair by block pair, computing the Jordan
// type of every Kronecker product J_a (x) J_b explicitly.
enum class OracleStrategy { Dense, BlockReduced };

struct OracleOptions {
    std::int64_t dim_cap = 4096;
    OracleStrategy strategy = OracleStrategy::Dense;
};

struct OracleResult {
    JordanType jordan;
    std::int64_t dim = 0;
    std::vector<std::size_t> ranks; // Dense strategy only
};

// The explicit matrix of u on a T-free expression (twist and dual act as the
// identity on matrices with entries in the prime field).
FpMatrix build_matrix(const ModuleExpr &e, std::uint32_t p, std::int64_t dim_cap = 4096);

// Throws DomainError on T-atoms or when the dimension exceeds the cap.
OracleResult oracle_eval(const ModuleExpr &e, std::uint32_t p, const OracleOptions &opts = {});

// Audit record {"expr", "p", "ranks", "jordan"} as a JSON string.
std::string oracle_certificate(const ModuleExpr &e, std::uint32_t p, const OracleResult &r);

} // namespace unip
