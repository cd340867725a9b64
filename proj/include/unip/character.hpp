#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace unip {

/// Formal character of an SL2-module: weight -> multiplicity, stored sparsely.
///
/// SL2 characters are symmetric under w -> -w; every constructor in this
/// library preserves that, and is_symmetric() lets callers assert it.
class Character {
  public:
    using WeightMap = std::map<std::int64_t, std::int64_t>;

    Character() = default;
    explicit Character(WeightMap weights);

    // ch V(m): weights m, m-2, ..., -m, each once.
    static Character weyl(std::int64_t m);
    static Character trivial() { return weyl(0); }

    void add_weight(std::int64_t weight, std::int64_t mult);

    const WeightMap &weights() const noexcept { return weights_; }
    std::int64_t multiplicity(std::int64_t weight) const;
    std::int64_t dim() const;
    bool is_symmetric() const;

    // "-2:1 0:2 2:1" ascending by weight.
    std::string to_string() const;

    friend bool operator==(const Character &, const Character &) = default;

  private:
    WeightMap weights_;
};

Character char_add(const Character &a, const Character &b);
// Convolution of weight maps. Throws DomainError on integer overflow.
Character char_tensor(const Character &a, const Character &b);
// Scales every weight by p^l, l >= 1.
Character char_twist(const Character &a, std::int64_t p, int l);
// SL2 characters are self-dual.
inline Character char_dual(const Character &a) { return a; }
inline std::int64_t char_dim(const Character &a) { return a.dim(); }

} // namespace unip
