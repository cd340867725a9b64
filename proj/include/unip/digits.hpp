#pragma once

#include <cstdint>
#include <vector>

namespace unip {

/// Base-p expansion of a dominant SL2 weight, least significant digit first,
/// without trailing zeros (the empty vector is the weight 0).
struct DigitVector {
    std::vector<int> digits;
    std::int64_t p = 2;

    std::int64_t weight() const;
    // Digit at position i, zero beyond the stored length.
    int at(std::size_t i) const noexcept { return i < digits.size() ? digits[i] : 0; }
    std::size_t size() const noexcept { return digits.size(); }

    friend bool operator==(const DigitVector &, const DigitVector &) = default;
};

DigitVector base_p_digits(std::int64_t n, std::int64_t p);

} // namespace unip
