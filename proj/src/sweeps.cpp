#include "unip/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "unip/digits.hpp"
#include "unip/ext_classify.hpp"
#include "unip/jordan_calculus.hpp"
#include "unip/oracle.hpp"
#include "unip/primes.hpp"

namespace unip {

namespace {

// Runs check(i) for i in [0, n); each call returns an empty string on success.
SweepReport run_grid(std::size_t n, Exec exec, const std::function<std::string(std::size_t)> &check) {
    SweepReport report;
    report.cases = n;
    std::vector<std::string> out(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::ptrdiff_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = check(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = check(static_cast<std::size_t>(i));
    }
    for (auto &s : out)
        if (!s.empty())
            report.mismatches.push_back(std::move(s));
    return report;
}

std::string mismatch(const std::string &what, const JordanType &got, const JordanType &want) {
    return what + ": formula " + got.to_string() + ", oracle " + want.to_string();
}

// Weights whose nonzero base-p digits form the given multiset all share one
// matrix up to reordering of Kronecker factors, hence one Jordan type.
using DigitKey = std::vector<int>;

DigitKey digit_key(std::int64_t lambda, std::int64_t p) {
    DigitKey key;
    for (int d : base_p_digits(lambda, p).digits)
        if (d != 0)
            key.push_back(d);
    std::sort(key.begin(), key.end());
    return key;
}

std::int64_t key_dim(const DigitKey &key) {
    std::int64_t dim = 1;
    for (int d : key)
        dim = checked_mul(dim, d + 1);
    return dim;
}

void multisets(std::int64_t p, std::int64_t cap, DigitKey &cur, int min_digit, std::vector<DigitKey> &out) {
    out.push_back(cur);
    for (int d = min_digit; d < p; ++d) {
        if (key_dim(cur) * (d + 1) > cap)
            break;
        cur.push_back(d);
        multisets(p, cap, cur, d, out);
        cur.pop_back();
    }
}

std::int64_t representative(const DigitKey &key, std::int64_t p) {
    std::int64_t lambda = 0;
    for (std::size_t i = 0; i < key.size(); ++i)
        lambda = checked_add(lambda, checked_mul(key[i], checked_pow(p, static_cast<int>(i))));
    return lambda;
}

} // namespace

SweepReport sweep_tensor(const std::vector<std::int64_t> &primes, Exec exec) {
    struct Case {
        std::int64_t m, n, p;
    };
    std::vector<Case> cases;
    for (auto p : primes) {
        require_prime(p);
        for (std::int64_t n = 1; n <= p; ++n)
            for (std::int64_t m = 1; m <= n; ++m)
                cases.push_back({m, n, p});
    }
    return run_grid(cases.size(), exec, [&](std::size_t i) -> std::string {
        const auto [m, n, p] = cases[i];
        const auto q = static_cast<std::uint32_t>(p);
        const auto want = jordan_type_of_unipotent(kron(jordan_block_matrix(m, q), jordan_block_matrix(n, q)));
        const auto got = tensor_jordan(m, n, p);
        if (got == want)
            return {};
        return mismatch("J_" + std::to_string(m) + " x J_" + std::to_string(n) + " p=" + std::to_string(p), got,
                        want);
    });
}

SweepReport sweep_weyl(std::int64_t max_m, const std::vector<std::int64_t> &primes, Exec exec) {
    std::vector<std::pair<std::int64_t, std::int64_t>> cases;
    for (auto p : primes) {
        require_prime(p);
        // Largest matrices first so dynamic scheduling balances.
        for (std::int64_t m = max_m; m >= 0; --m)
            cases.emplace_back(m, p);
    }
    return run_grid(cases.size(), exec, [&](std::size_t i) -> std::string {
        const auto [m, p] = cases[i];
        const auto want = jordan_type_of_unipotent(pascal_matrix(m, static_cast<std::uint32_t>(p)));
        const auto got = weyl_jordan(m, p);
        if (got == want)
            return {};
        return mismatch("V(" + std::to_string(m) + ") p=" + std::to_string(p), got, want);
    });
}

SweepReport sweep_irrep(std::int64_t dim_cap, const std::vector<std::int64_t> &primes, int max_digits,
                        std::int64_t dense_cap, Exec exec) {
    SweepReport total;
    for (auto p : primes) {
        require_prime(p);
        const auto q = static_cast<std::uint32_t>(p);

        // Oracle side: one computation per digit multiset.
        std::vector<DigitKey> keys;
        DigitKey cur;
        multisets(p, dim_cap, cur, 1, keys);
        std::vector<JordanType> oracle(keys.size());
        auto per_key = run_grid(keys.size(), exec, [&](std::size_t i) -> std::string {
            const auto lambda = representative(keys[i], p);
            const auto e = L(lambda);
            OracleOptions opts{dim_cap, OracleStrategy::BlockReduced};
            oracle[i] = oracle_eval(*e, q, opts).jordan;
            std::string err;
            if (key_dim(keys[i]) <= dense_cap) {
                opts.strategy = OracleStrategy::Dense;
                const auto dense = oracle_eval(*e, q, opts).jordan;
                if (!(dense == oracle[i]))
                    err = "L(" + std::to_string(lambda) + ") p=" + std::to_string(p) + ": dense oracle " +
                          dense.to_string() + ", block oracle " + oracle[i].to_string();
            }
            const auto got = irrep_jordan(lambda, p);
            if (err.empty() && !(got == oracle[i]))
                err = mismatch("L(" + std::to_string(lambda) + ") p=" + std::to_string(p), got, oracle[i]);
            return err;
        });
        std::map<DigitKey, const JordanType *> by_key;
        for (std::size_t i = 0; i < keys.size(); ++i)
            by_key.emplace(keys[i], &oracle[i]);

        // Formula side: every weight below p^max_digits within the cap.
        std::vector<std::int64_t> weights;
        const auto limit = checked_pow(p, max_digits);
        for (std::int64_t lambda = 0; lambda < limit; ++lambda)
            if (key_dim(digit_key(lambda, p)) <= dim_cap)
                weights.push_back(lambda);
        auto per_weight = run_grid(weights.size(), exec, [&](std::size_t i) -> std::string {
            const auto lambda = weights[i];
            const auto &want = *by_key.at(digit_key(lambda, p));
            const auto got = irrep_jordan(lambda, p);
            if (got == want)
                return {};
            return mismatch("L(" + std::to_string(lambda) + ") p=" + std::to_string(p), got, want);
        });

        for (auto *r : {&per_key, &per_weight}) {
            total.cases += r->cases;
            for (auto &m : r->mismatches)
                total.mismatches.push_back(std::move(m));
        }
    }
    return total;
}

SweepReport sweep_ext(std::int64_t max_weight, const std::vector<std::int64_t> &primes, Exec exec) {
    SweepReport total;
    for (auto p : primes) {
        require_prime(p);
        // One row per lambda; each row checks mu >= lambda against its mirror.
        auto r = run_grid(static_cast<std::size_t>(max_weight + 1), exec, [&](std::size_t i) -> std::string {
            const auto lambda = static_cast<std::int64_t>(i);
            if (ext1_nonzero(lambda, lambda, p))
                return "Ext^1(L(" + std::to_string(lambda) + "), itself) != 0 at p=" + std::to_string(p);
            for (std::int64_t mu = lambda + 1; mu <= max_weight; ++mu)
                if (ext1_nonzero(lambda, mu, p) != ext1_nonzero(mu, lambda, p))
                    return "asymmetric at (" + std::to_string(lambda) + ", " + std::to_string(mu) +
                           ") p=" + std::to_string(p);
            return {};
        });
        total.cases += r.cases * static_cast<std::size_t>(max_weight + 2) / 2;
        for (auto &m : r.mismatches)
            total.mismatches.push_back(std::move(m));
    }
    return total;
}

} // namespace unip
