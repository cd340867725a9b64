#include "unip/jordan_calculus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "unip/digits.hpp"
#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

namespace {

void require_weight(std::int64_t w) {
    if (w < 0)
        throw DomainError("dominant weights are non-negative, got " + std::to_string(w));
}

JordanType tensor_blocks(std::int64_t m, std::int64_t n, std::int64_t p) {
    if (m > n)
        std::swap(m, n);
    const auto h = std::min(m, p - n);
    const auto big = std::max<std::int64_t>(0, m + n - p);
    JordanType t;
    for (std::int64_t i = 0; i < h; ++i)
        t.add(n - m + 2 * i + 1);
    t.add(p, big);
    return t;
}

} // namespace

JordanType tensor_jordan(std::int64_t m, std::int64_t n, std::int64_t p) {
    require_prime(p);
    if (m < 1 || m > p || n < 1 || n > p)
        throw DomainError("block sizes must lie in [1, p]; got J_" + std::to_string(m) + " (x) J_" +
                          std::to_string(n) + " at p = " + std::to_string(p));
    return tensor_blocks(m, n, p);
}

JordanType tensor_jordan_types(const JordanType &a, const JordanType &b, std::int64_t p) {
    require_prime(p);
    a.check_order(p);
    b.check_order(p);
    JordanType out;
    for (auto [sa, ma] : a.blocks())
        for (auto [sb, mb] : b.blocks())
            out.merge(scale(tensor_blocks(sa, sb, p), checked_mul(ma, mb)));
    return out;
}

JordanType weyl_jordan(std::int64_t m, std::int64_t p) {
    require_prime(p);
    require_weight(m);
    JordanType t;
    t.add(p, m / p);
    t.add(m % p + 1);
    return t;
}

JordanType irrep_jordan(std::int64_t lambda, std::int64_t p) {
    require_weight(lambda);
    const auto digits = base_p_digits(lambda, p);
    JordanType t{1};
    for (int d : digits.digits)
        if (d != 0)
            t = tensor_jordan_types(t, JordanType{d + 1}, p);
    return t;
}

Character weyl_char(std::int64_t m) { return Character::weyl(m); }

Character irrep_char(std::int64_t lambda, std::int64_t p) {
    require_weight(lambda);
    const auto digits = base_p_digits(lambda, p);
    Character ch = Character::trivial();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits.digits[i] == 0)
            continue;
        auto factor = Character::weyl(digits.digits[i]);
        if (i > 0)
            factor = char_twist(factor, p, static_cast<int>(i));
        ch = char_tensor(ch, factor);
    }
    return ch;
}

namespace {

struct TiltingCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::int64_t, std::int64_t>, Character> table;
};

TiltingCache &tilting_cache() {
    static TiltingCache cache;
    return cache;
}

Character tilting_char_uncached(std::int64_t c, std::int64_t p) {
    if (c <= p - 1)
        return Character::weyl(c);
    if (c <= 2 * p - 2)
        return char_add(Character::weyl(c), Character::weyl(2 * p - 2 - c));
    // c = s p + (p - 1 + r) with 0 <= r <= p - 1, s >= 1.
    const auto r = (c - (p - 1)) % p;
    const auto s = (c - (p - 1) - r) / p;
    return char_tensor(tilting_char(p - 1 + r, p), char_twist(tilting_char(s, p), p, 1));
}

std::int64_t tilting_dim_recursive(std::int64_t c, std::int64_t p) {
    if (c <= p - 1)
        return c + 1;
    if (c <= 2 * p - 2)
        return 2 * p;
    const auto r = (c - (p - 1)) % p;
    const auto s = (c - (p - 1) - r) / p;
    return checked_mul(tilting_dim_recursive(p - 1 + r, p), tilting_dim_recursive(s, p));
}

} // namespace

Character tilting_char(std::int64_t c, std::int64_t p) {
    require_prime(p);
    require_weight(c);
    auto &cache = tilting_cache();
    const auto key = std::make_pair(c, p);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end())
            return it->second;
    }
    // Computed outside the lock; concurrent fills of the same key agree.
    auto ch = tilting_char_uncached(c, p);
    std::unique_lock lock(cache.mutex);
    return cache.table.try_emplace(key, std::move(ch)).first->second;
}

std::int64_t tilting_dim(std::int64_t c, std::int64_t p) { return char_dim(tilting_char(c, p)); }

JordanType tilting_jordan(std::int64_t c, std::int64_t p) {
    require_prime(p);
    require_weight(c);
    if (c <= p - 1)
        return irrep_jordan(c, p);
    const auto d = tilting_dim(c, p);
    if (d % p != 0)
        throw InternalError("dim T(" + std::to_string(c) + ") = " + std::to_string(d) + " is not divisible by p");
    JordanType t;
    t.add(p, d / p);
    return t;
}

namespace {

Evaluation eval_node(const ModuleExpr &e, std::int64_t p) {
    if (auto a = e.as<ModuleExpr::Atom>()) {
        switch (a->kind) {
        case AtomKind::Irreducible: {
            auto ch = irrep_char(a->weight, p);
            auto d = ch.dim();
            return {std::move(ch), d, irrep_jordan(a->weight, p)};
        }
        case AtomKind::Weyl:
            return {weyl_char(a->weight), a->weight + 1, weyl_jordan(a->weight, p)};
        case AtomKind::Tilting: {
            auto ch = tilting_char(a->weight, p);
            auto d = ch.dim();
            return {std::move(ch), d, tilting_jordan(a->weight, p)};
        }
        }
    }
    if (auto s = e.as<ModuleExpr::Sum>()) {
        auto l = eval_node(*s->left, p);
        auto r = eval_node(*s->right, p);
        return {char_add(l.character, r.character), checked_add(l.dim, r.dim), l.jordan + r.jordan};
    }
    if (auto t = e.as<ModuleExpr::Tensor>()) {
        auto l = eval_node(*t->left, p);
        auto r = eval_node(*t->right, p);
        return {char_tensor(l.character, r.character), checked_mul(l.dim, r.dim),
                tensor_jordan_types(l.jordan, r.jordan, p)};
    }
    if (auto d = e.as<ModuleExpr::Dual>())
        return eval_node(*d->inner, p);
    auto w = e.as<ModuleExpr::Twist>();
    auto inner = eval_node(*w->inner, p);
    inner.character = char_twist(inner.character, p, w->exponent);
    return inner;
}

} // namespace

Evaluation eval_expr(const ModuleExpr &e, std::int64_t p) {
    require_prime(p);
    auto result = eval_node(e, p);
    if (result.character.dim() != result.dim || result.jordan.dim() != result.dim)
        throw InternalError("dimension mismatch between character and Jordan type of " + render(e));
    return result;
}

std::int64_t expr_dim(const ModuleExpr &e, std::int64_t p) {
    require_prime(p);
    if (auto a = e.as<ModuleExpr::Atom>()) {
        switch (a->kind) {
        case AtomKind::Irreducible: {
            std::int64_t d = 1;
            for (int digit : base_p_digits(a->weight, p).digits)
                d = checked_mul(d, digit + 1);
            return d;
        }
        case AtomKind::Weyl:
            return checked_add(a->weight, 1);
        case AtomKind::Tilting:
            return tilting_dim_recursive(a->weight, p);
        }
    }
    if (auto s = e.as<ModuleExpr::Sum>())
        return checked_add(expr_dim(*s->left, p), expr_dim(*s->right, p));
    if (auto t = e.as<ModuleExpr::Tensor>())
        return checked_mul(expr_dim(*t->left, p), expr_dim(*t->right, p));
    if (auto d = e.as<ModuleExpr::Dual>())
        return expr_dim(*d->inner, p);
    return expr_dim(*e.as<ModuleExpr::Twist>()->inner, p);
}

} // namespace unip
