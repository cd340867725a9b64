#include "unip/digits.hpp"

#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

std::int64_t DigitVector::weight() const {
    std::int64_t w = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        w = checked_add(checked_mul(w, p), *it);
    return w;
}

DigitVector base_p_digits(std::int64_t n, std::int64_t p) {
    require_prime(p);
    if (n < 0)
        throw DomainError("weights must be non-negative, got " + std::to_string(n));
    DigitVector d{{}, p};
    for (; n > 0; n /= p)
        d.digits.push_back(static_cast<int>(n % p));
    return d;
}

} // namespace unip
