#include "unip/oracle.hpp"

#include <map>
#include <mutex>

#include <json.hpp>

#include "unip/digits.hpp"
#include "unip/error.hpp"
#include "unip/jordan_calculus.hpp"

namespace unip {

FpMatrix pascal_matrix(std::int64_t m, std::uint32_t p) {
    if (m < 0)
        throw DomainError("symmetric power degree must be non-negative");
    const auto n = static_cast<std::size_t>(m) + 1;
    FpMatrix out(n, n, p);
    // Column j holds row j of Pascal's triangle mod p.
    std::vector<std::uint32_t> prev, cur;
    for (std::size_t j = 0; j < n; ++j) {
        cur.assign(j + 1, 1);
        for (std::size_t i = 1; i < j; ++i)
            cur[i] = (prev[i - 1] + prev[i]) % p;
        for (std::size_t i = 0; i <= j; ++i)
            out.row(i)[j] = cur[i];
        std::swap(prev, cur);
    }
    return out;
}

FpMatrix jordan_block_matrix(std::int64_t size, std::uint32_t p) {
    if (size < 1)
        throw DomainError("Jordan block size must be positive");
    auto n = static_cast<std::size_t>(size);
    FpMatrix m = FpMatrix::identity(n, p);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m.set(i, i + 1, 1);
    return m;
}

FpMatrix jordan_type_matrix(const JordanType &t, std::uint32_t p) {
    FpMatrix m(0, 0, p);
    for (auto size : t.sizes())
        m = direct_sum(m, jordan_block_matrix(size, p));
    return m;
}

RankProfile rank_profile(const FpMatrix &m) {
    if (!m.square())
        throw DomainError("Jordan type needs a square matrix");
    const std::uint32_t p = m.p();
    const FpMatrix nil = m.minus_identity();
    RankProfile prof;
    prof.ranks.assign(p + 1, 0);
    prof.ranks[0] = m.rows();
    FpMatrix power = nil;
    for (std::uint32_t k = 1; k <= p; ++k) {
        prof.ranks[k] = rank(power);
        if (prof.ranks[k] == 0)
            break;
        if (k < p)
            power = multiply(nil, power); // nil is the sparser factor
    }
    if (prof.ranks[p] != 0)
        throw DomainError("matrix is not unipotent of order p: (M - I)^p has rank " +
                          std::to_string(prof.ranks[p]));
    for (std::uint32_t k = 1; k <= p; ++k) {
        const auto at_least_k = prof.ranks[k - 1] - prof.ranks[k];
        const auto at_least_next = k < p ? prof.ranks[k] - prof.ranks[k + 1] : 0;
        if (at_least_next > at_least_k)
            throw InternalError("rank sequence is not a partition profile");
        prof.jordan.add(k, static_cast<std::int64_t>(at_least_k - at_least_next));
    }
    return prof;
}

JordanType jordan_type_of_unipotent(const FpMatrix &m) { return rank_profile(m).jordan; }

namespace {

void require_oracle_input(const ModuleExpr &e, std::uint32_t p, std::int64_t dim_cap) {
    if (contains_tilting(e))
        throw DomainError("the matrix oracle has no model for tilting atoms T(c)");
    const auto d = expr_dim(e, p);
    if (d > dim_cap)
        throw DomainError("dimension " + std::to_string(d) + " exceeds the oracle cap " + std::to_string(dim_cap));
}

FpMatrix irreducible_matrix(std::int64_t lambda, std::uint32_t p) {
    FpMatrix m = FpMatrix::identity(1, p);
    for (int d : base_p_digits(lambda, p).digits)
        if (d != 0)
            m = kron(m, pascal_matrix(d, p));
    return m;
}

FpMatrix build_dense(const ModuleExpr &e, std::uint32_t p) {
    if (auto a = e.as<ModuleExpr::Atom>())
        return a->kind == AtomKind::Weyl ? pascal_matrix(a->weight, p) : irreducible_matrix(a->weight, p);
    if (auto s = e.as<ModuleExpr::Sum>())
        return direct_sum(build_dense(*s->left, p), build_dense(*s->right, p));
    if (auto t = e.as<ModuleExpr::Tensor>())
        return kron(build_dense(*t->left, p), build_dense(*t->right, p));
    if (auto d = e.as<ModuleExpr::Dual>())
        return transpose(inverse(build_dense(*d->inner, p)));
    // Entries lie in F_p, which the Frobenius fixes.
    return build_dense(*e.as<ModuleExpr::Twist>()->inner, p);
}

// Jordan types of J_a (x) J_b and of the contragredient J_a^{-T}, each
// computed from an explicit matrix and cached.
class BlockCache {
  public:
    JordanType pair(std::int64_t a, std::int64_t b, std::uint32_t p) {
        if (a > b)
            std::swap(a, b);
        return lookup(pairs_, {p, a, b}, [&] {
            return jordan_type_of_unipotent(kron(jordan_block_matrix(a, p), jordan_block_matrix(b, p)));
        });
    }

    JordanType dual(std::int64_t a, std::uint32_t p) {
        return lookup(duals_, {p, a, 0},
                      [&] { return jordan_type_of_unipotent(transpose(inverse(jordan_block_matrix(a, p)))); });
    }

  private:
    using Key = std::tuple<std::uint32_t, std::int64_t, std::int64_t>;

    template <class F> JordanType lookup(std::map<Key, JordanType> &table, Key key, F compute) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table.find(key); it != table.end())
                return it->second;
        }
        auto t = compute();
        std::lock_guard lock(mutex_);
        return table.try_emplace(key, std::move(t)).first->second;
    }

    std::mutex mutex_;
    std::map<Key, JordanType> pairs_, duals_;
};

BlockCache &block_cache() {
    static BlockCache cache;
    return cache;
}

JordanType reduced_tensor(const JordanType &a, const JordanType &b, std::uint32_t p) {
    JordanType out;
    for (auto [sa, ma] : a.blocks())
        for (auto [sb, mb] : b.blocks())
            out.merge(scale(block_cache().pair(sa, sb, p), ma * mb));
    return out;
}

JordanType eval_reduced(const ModuleExpr &e, std::uint32_t p) {
    if (auto a = e.as<ModuleExpr::Atom>()) {
        if (a->kind == AtomKind::Weyl)
            return jordan_type_of_unipotent(pascal_matrix(a->weight, p));
        JordanType t{1};
        for (int d : base_p_digits(a->weight, p).digits)
            if (d != 0)
                t = reduced_tensor(t, jordan_type_of_unipotent(pascal_matrix(d, p)), p);
        return t;
    }
    if (auto s = e.as<ModuleExpr::Sum>())
        return eval_reduced(*s->left, p) + eval_reduced(*s->right, p);
    if (auto t = e.as<ModuleExpr::Tensor>())
        return reduced_tensor(eval_reduced(*t->left, p), eval_reduced(*t->right, p), p);
    if (auto d = e.as<ModuleExpr::Dual>()) {
        JordanType out;
        const auto inner = eval_reduced(*d->inner, p);
        for (auto [s, m] : inner.blocks())
            out.merge(scale(block_cache().dual(s, p), m));
        return out;
    }
    return eval_reduced(*e.as<ModuleExpr::Twist>()->inner, p);
}

} // namespace

FpMatrix build_matrix(const ModuleExpr &e, std::uint32_t p, std::int64_t dim_cap) {
    require_oracle_input(e, p, dim_cap);
    return build_dense(e, p);
}

OracleResult oracle_eval(const ModuleExpr &e, std::uint32_t p, const OracleOptions &opts) {
    require_oracle_input(e, p, opts.dim_cap);
    OracleResult r;
    if (opts.strategy == OracleStrategy::Dense) {
        auto prof = rank_profile(build_dense(e, p));
        r.jordan = std::move(prof.jordan);
        r.ranks = std::move(prof.ranks);
    } else {
        r.jordan = eval_reduced(e, p);
    }
    r.dim = r.jordan.dim();
    return r;
}

std::string oracle_certificate(const ModuleExpr &e, std::uint32_t p, const OracleResult &r) {
    nlohmann::json j;
    j["expr"] = render(e);
    j["p"] = p;
    j["dim"] = r.dim;
    j["ranks"] = r.ranks;
    auto blocks = nlohmann::json::array();
    for (auto [s, m] : r.jordan.blocks())
        blocks.push_back({s, m});
    j["jordan"] = blocks;
    return j.dump();
}

} // namespace unip
