#include "unip/ext_classify.hpp"

#include <algorithm>
#include <functional>

#include "unip/digits.hpp"
#include "unip/error.hpp"
#include "unip/jordan_calculus.hpp"
#include "unip/primes.hpp"

namespace unip {

bool ext1_nonzero(std::int64_t lambda, std::int64_t mu, std::int64_t p) {
    require_prime(p);
    if (lambda < 0 || mu < 0)
        throw DomainError("weights must be non-negative");
    const auto ld = base_p_digits(lambda, p);
    const auto md = base_p_digits(mu, p);
    const auto lo = static_cast<std::size_t>(p_adic_valuation(lambda + 1, p));
    const auto hi = std::max(ld.size(), md.size()) + 1;
    const auto top = hi + 2;
    for (std::size_t k = lo; k <= hi; ++k) {
        const int lk = ld.at(k);
        if (lk > p - 2 || md.at(k) != p - 2 - lk)
            continue;
        const int diff = md.at(k + 1) - ld.at(k + 1);
        if (diff != 1 && diff != -1)
            continue;
        bool rest_equal = true;
        for (std::size_t i = 0; i < top && rest_equal; ++i)
            if (i != k && i != k + 1 && ld.at(i) != md.at(i))
                rest_equal = false;
        if (rest_equal)
            return true;
    }
    return false;
}

std::string ExtVerdict::to_string() const {
    switch (kind) {
    case ExtVerdictKind::NoExtension:
        return "NoExtension";
    case ExtVerdictKind::ManyLargeBlocks:
        return "ManyLargeBlocks";
    case ExtVerdictKind::WeylTwist:
        return "WeylTwist(" + std::to_string(c) + ", " + std::to_string(l) + ")";
    case ExtVerdictKind::DualWeylTwist:
        return "DualWeylTwist(" + std::to_string(c) + ", " + std::to_string(l) + ")";
    }
    return "?";
}

namespace {

// (c, l) with high = c p^l, low = (2p - 2 - c) p^l and p <= c <= 2p - 2.
std::optional<std::pair<std::int64_t, int>> weyl_pair(std::int64_t high, std::int64_t low, std::int64_t p) {
    std::int64_t scale = 1;
    for (int l = 0; scale <= high; ++l) {
        if (high % scale != 0)
            break;
        const auto c = high / scale;
        if (c >= p && c <= 2 * p - 2 && low == (2 * p - 2 - c) * scale)
            return std::make_pair(c, l);
        if (scale > high / p)
            break;
        scale *= p;
    }
    return std::nullopt;
}

} // namespace

ExtVerdict nonsplit_ext_classify(std::int64_t lambda, std::int64_t mu, std::int64_t p) {
    ExtVerdict v;
    if (!ext1_nonzero(lambda, mu, p))
        return v;
    if (auto w = weyl_pair(lambda, mu, p)) {
        v.kind = ExtVerdictKind::WeylTwist;
        std::tie(v.c, v.l) = *w;
    } else if (auto d = weyl_pair(mu, lambda, p)) {
        v.kind = ExtVerdictKind::DualWeylTwist;
        std::tie(v.c, v.l) = *d;
    } else {
        v.kind = ExtVerdictKind::ManyLargeBlocks;
        return v;
    }
    v.jordan = JordanType{p, v.c - p + 1};
    return v;
}

namespace {

ExprPtr twisted(ExprPtr e, int n) { return n > 0 ? make_twist(std::move(e), n) : e; }

// Multisets of restricted nonzero digits (ascending) with prod (d + 1) = dim.
void digit_multisets(std::int64_t remaining, int min_digit, std::int64_t p, std::vector<int> &current,
                     std::vector<std::vector<int>> &out) {
    if (remaining == 1) {
        out.push_back(current);
        return;
    }
    for (int d = min_digit; d <= p - 1; ++d) {
        if (remaining % (d + 1) != 0)
            continue;
        current.push_back(d);
        digit_multisets(remaining / (d + 1), d, p, current, out);
        current.pop_back();
    }
}

} // namespace

ExprPtr ModuleFamily::instantiate(const std::vector<int> &twists) const {
    if (kind == FamilyKind::Irreducible) {
        if (twists.size() != digits.size())
            throw DomainError("irreducible family needs one twist exponent per digit");
        auto sorted = twists;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainError("twist exponents of an irreducible family must be pairwise distinct");
        if (digits.empty())
            return L(0);
        ExprPtr e;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            auto factor = twisted(L(digits[i]), twists[i]);
            e = e ? make_tensor(e, factor) : factor;
        }
        return e;
    }
    if (twists.size() != 1)
        throw DomainError("Weyl families take a single twist exponent");
    auto base = V(c);
    if (kind == FamilyKind::DualWeyl)
        base = make_dual(base);
    return twisted(base, twists[0]);
}

std::vector<ModuleFamily> enumerate_indecomposables(const JordanType &t, std::int64_t p) {
    require_prime(p);
    t.check_order(p);
    if (t.multiplicity(p) >= 2)
        throw DomainError("Jordan type has " + std::to_string(t.multiplicity(p)) +
                          " blocks of size p; the classification only covers at most one");
    std::vector<ModuleFamily> out;
    if (t.empty())
        return out;

    std::vector<std::vector<int>> candidates;
    std::vector<int> current;
    digit_multisets(t.dim(), 1, p, current, candidates);
    for (const auto &digits : candidates) {
        JordanType jt{1};
        for (int d : digits)
            jt = tensor_jordan_types(jt, JordanType{d + 1}, p);
        if (jt != t)
            continue;
        ModuleFamily f{FamilyKind::Irreducible, digits, 0, {}, {}};
        if (digits.empty()) {
            f.templ = "L(0)";
            f.constraint = "none";
        } else {
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (i)
                    f.templ += '*';
                f.templ += "L(" + std::to_string(digits[i]) + ")[n" + std::to_string(i + 1) + "]";
            }
            f.constraint = digits.size() == 1 ? "n1 >= 0" : "n_i >= 0 pairwise distinct";
        }
        out.push_back(std::move(f));
    }

    // J_p + J_{c-p+1}: the twisted Weyl modules V(c) and their duals.
    if (t.num_blocks() == 2 && t.multiplicity(p) == 1) {
        const auto small = t.sizes().back();
        if (small < p) {
            const auto c = p - 1 + small;
            const auto cs = std::to_string(c);
            out.push_back({FamilyKind::Weyl, {}, c, "V(" + cs + ")[l]", "l >= 0"});
            out.push_back({FamilyKind::DualWeyl, {}, c, "V(" + cs + ")^*[l]", "l >= 0"});
        }
    }
    return out;
}

std::vector<Dim4Family> classify_dim4_p2() {
    return {
        {"(i)", "L(1)[n]*L(1)[m]", "0 <= n < m", true, true,
         [](int n, int m) -> ExprPtr {
             if (!(0 <= n && n < m))
                 throw DomainError("family (i) needs 0 <= n < m");
             return make_tensor(twisted(L(1), n), twisted(L(1), m));
         }},
        {"(ii)", "L(1)[n]+L(1)[m]", "0 <= n <= m", false, false,
         [](int n, int m) -> ExprPtr {
             if (!(0 <= n && n <= m))
                 throw DomainError("family (ii) needs 0 <= n <= m");
             return make_sum(twisted(L(1), n), twisted(L(1), m));
         }},
        {"(iii)", "T(2)[n] = L(1)[n]*L(1)[n]", "n >= 0", false, true,
         [](int n, int) -> ExprPtr {
             if (n < 0)
                 throw DomainError("family (iii) needs n >= 0");
             return twisted(T(2), n);
         }},
    };
}

SemisimplicityVerdict semisimplicity_verdict(const JordanType &t, bool self_dual, std::int64_t p) {
    require_prime(p);
    t.check_order(p);
    const auto big = t.multiplicity(p);
    if (big == 0 || (self_dual && big <= 1))
        return SemisimplicityVerdict::ForcedSemisimple;
    return SemisimplicityVerdict::Inconclusive;
}

std::string to_string(ExtVerdictKind k) {
    switch (k) {
    case ExtVerdictKind::NoExtension:
        return "NoExtension";
    case ExtVerdictKind::WeylTwist:
        return "WeylTwist";
    case ExtVerdictKind::DualWeylTwist:
        return "DualWeylTwist";
    case ExtVerdictKind::ManyLargeBlocks:
        return "ManyLargeBlocks";
    }
    return "?";
}

std::string to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::Irreducible:
        return "Irreducible";
    case FamilyKind::Weyl:
        return "Weyl";
    case FamilyKind::DualWeyl:
        return "DualWeyl";
    }
    return "?";
}

std::string to_string(SemisimplicityVerdict v) {
    return v == SemisimplicityVerdict::ForcedSemisimple ? "ForcedSemisimple" : "Inconclusive";
}

} // namespace unip
