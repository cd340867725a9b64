#include "unip/character.hpp"

#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

Character::Character(WeightMap weights) {
    for (auto [w, m] : weights)
        add_weight(w, m);
}

Character Character::weyl(std::int64_t m) {
    if (m < 0)
        throw DomainError("Weyl module weight must be non-negative");
    Character c;
    for (std::int64_t w = -m; w <= m; w += 2)
        c.weights_[w] = 1;
    return c;
}

void Character::add_weight(std::int64_t weight, std::int64_t mult) {
    if (mult < 0)
        throw DomainError("negative weight multiplicity");
    if (mult == 0)
        return;
    auto &slot = weights_[weight];
    slot = checked_add(slot, mult);
}

std::int64_t Character::multiplicity(std::int64_t weight) const {
    auto it = weights_.find(weight);
    return it == weights_.end() ? 0 : it->second;
}

std::int64_t Character::dim() const {
    std::int64_t d = 0;
    for (auto [w, m] : weights_)
        d = checked_add(d, m);
    return d;
}

bool Character::is_symmetric() const {
    for (auto [w, m] : weights_)
        if (multiplicity(-w) != m)
            return false;
    return true;
}

std::string Character::to_string() const {
    std::string out;
    for (auto [w, m] : weights_) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(w) + ':' + std::to_string(m);
    }
    return out;
}

Character char_add(const Character &a, const Character &b) {
    Character out = a;
    for (auto [w, m] : b.weights())
        out.add_weight(w, m);
    return out;
}

Character char_tensor(const Character &a, const Character &b) {
    Character out;
    for (auto [wa, ma] : a.weights())
        for (auto [wb, mb] : b.weights())
            out.add_weight(checked_add(wa, wb), checked_mul(ma, mb));
    return out;
}

Character char_twist(const Character &a, std::int64_t p, int l) {
    if (l < 1)
        throw DomainError("twist exponent must be >= 1");
    const auto factor = checked_pow(p, l);
    Character out;
    for (auto [w, m] : a.weights())
        out.add_weight(checked_mul(w, factor), m);
    return out;
}

} // namespace unip
