#pragma once

#include <cstdint>

namespace unip {

bool is_prime(std::int64_t n) noexcept;

// Throws DomainError unless p is prime. The single validation site for
// characteristics; everything downstream of a public entry point assumes it.
void require_prime(std::int64_t p);

// Largest k with p^k | n, for n >= 1.
int p_adic_valuation(std::int64_t n, std::int64_t p);

// p^e with overflow detection (throws DomainError).
std::int64_t checked_pow(std::int64_t p, int e);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

} // namespace unip
