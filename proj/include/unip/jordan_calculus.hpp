#pragma once

#include <cstdint>

#include "unip/character.hpp"
#include "unip/jordan_type.hpp"
#include "unip/module_expr.hpp"

namespace unip {

// J_m (x) J_n for 1 <= m, n <= p in characteristic p (arguments in any order).
JordanType tensor_jordan(std::int64_t m, std::int64_t n, std::int64_t p);

// Bilinear extension of tensor_jordan to arbitrary order-p types.
JordanType tensor_jordan_types(const JordanType &a, const JordanType &b, std::int64_t p);

// V(m) restricted to a unipotent element of order p: q J_p + J_{r+1}, m = qp + r.
JordanType weyl_jordan(std::int64_t m, std::int64_t p);

// L(lambda) via Steinberg's factorization: tensor over base-p digits of J_{d+1}.
JordanType irrep_jordan(std::int64_t lambda, std::int64_t p);

// Formal characters of the basic modules.
Character weyl_char(std::int64_t m);
Character irrep_char(std::int64_t lambda, std::int64_t p);

// Character of T(c) by Donkin's recursion. Results are memoized per (c, p) in
// a process-wide cache that is safe to fill from several threads.
Character tilting_char(std::int64_t c, std::int64_t p);
std::int64_t tilting_dim(std::int64_t c, std::int64_t p);

// T(c) restricted to u: J_{c+1} for c < p, otherwise (dim T(c) / p) J_p.
JordanType tilting_jordan(std::int64_t c, std::int64_t p);

struct Evaluation {
    Character character;
    std::int64_t dim = 0;
    JordanType jordan;
};

// Structural evaluation of a module expression. Dual is the identity on both
// outputs; Twist scales the character and leaves the Jordan type alone.
Evaluation eval_expr(const ModuleExpr &e, std::int64_t p);

// Dimension only, without building characters. Throws on overflow.
std::int64_t expr_dim(const ModuleExpr &e, std::int64_t p);

} // namespace unip
