#include "unip/primes.hpp"

#include <string>

#include "unip/error.hpp"

namespace unip {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p))
        throw DomainError("characteristic " + std::to_string(p) + " is not prime");
}

int p_adic_valuation(std::int64_t n, std::int64_t p) {
    if (n <= 0)
        throw DomainError("valuation of non-positive integer");
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("integer overflow in weight arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw DomainError("integer overflow in weight arithmetic");
    return r;
}

std::int64_t checked_pow(std::int64_t p, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        r = checked_mul(r, p);
    return r;
}

} // namespace unip
