#include "unip/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

namespace {

using Vec = RootSystem::Vec;

Vec unit(std::size_t dim, std::size_t i, std::int64_t scale = 2) {
    Vec v(dim, 0);
    v[i] = scale;
    return v;
}

Vec add(Vec a, const Vec &b, std::int64_t sign = 1) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += sign * b[i];
    return a;
}

Vec combination(const std::vector<Vec> &basis, const std::vector<std::int64_t> &coeffs) {
    Vec v(basis.front().size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += coeffs[j] * basis[j][i];
    return v;
}

// Positive roots of type B/C/D (and e_i - e_j of A) in doubled coordinates.
void classical_roots(std::size_t n, bool plus, std::int64_t short_scale, std::vector<Vec> &roots) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            roots.push_back(add(unit(n, i), unit(n, j), -1));
            if (plus)
                roots.push_back(add(unit(n, i), unit(n, j)));
        }
    if (short_scale)
        for (std::size_t i = 0; i < n; ++i)
            roots.push_back(unit(n, i, short_scale));
}

std::vector<Vec> e8_simple() {
    std::vector<Vec> s;
    s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
    s.push_back(add(unit(8, 0), unit(8, 1)));
    for (std::size_t i = 1; i < 7; ++i)
        s.push_back(add(unit(8, i), unit(8, i - 1), -1));
    return s;
}

std::vector<Vec> e8_positive() {
    std::vector<Vec> roots;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            roots.push_back(add(unit(8, j), unit(8, i)));
            roots.push_back(add(unit(8, j), unit(8, i), -1));
        }
    for (int mask = 0; mask < 128; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0)
            continue;
        Vec v(8, 1);
        for (int i = 0; i < 7; ++i)
            if (mask & (1 << i))
                v[i] = -1;
        roots.push_back(v);
    }
    return roots;
}

// Exact rational solve of G x = b for the small Gram systems used here.
struct Frac {
    __int128 n = 0, d = 1;
    void normalize() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            a %= b;
            std::swap(a, b);
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
    }
};

Frac operator-(Frac a, Frac b) {
    Frac r{a.n * b.d - b.n * a.d, a.d * b.d};
    r.normalize();
    return r;
}
Frac operator*(Frac a, Frac b) {
    Frac r{a.n * b.n, a.d * b.d};
    r.normalize();
    return r;
}
Frac operator/(Frac a, Frac b) {
    Frac r{a.n * b.d, a.d * b.n};
    r.normalize();
    return r;
}

std::vector<Frac> solve(std::vector<std::vector<Frac>> a, std::vector<Frac> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].n == 0)
            ++piv;
        if (piv == n)
            throw InternalError("singular Gram matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].n == 0)
                continue;
            const Frac f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] = a[r][c] - f * a[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    std::vector<Frac> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

bool valid_rank(RootType type, int rank) {
    switch (type) {
    case RootType::A:
        return rank >= 1;
    case RootType::B:
    case RootType::C:
        return rank >= 2;
    case RootType::D:
        return rank >= 4;
    case RootType::E:
        return rank >= 6 && rank <= 8;
    case RootType::F:
        return rank == 4;
    case RootType::G:
        return rank == 2;
    }
    return false;
}

char type_letter(RootType t) { return "ABCDEFG"[static_cast<int>(t)]; }

} // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
    if (!valid_rank(type, rank))
        throw DomainError(std::string("no root system of type ") + type_letter(type) + std::to_string(rank) +
                          " in the supported range");
    const auto l = static_cast<std::size_t>(rank);
    switch (type) {
    case RootType::A:
        for (std::size_t i = 0; i < l; ++i)
            simple_.push_back(add(unit(l + 1, i), unit(l + 1, i + 1), -1));
        classical_roots(l + 1, false, 0, positive_);
        break;
    case RootType::B:
    case RootType::C:
    case RootType::D:
        for (std::size_t i = 0; i + 1 < l; ++i)
            simple_.push_back(add(unit(l, i), unit(l, i + 1), -1));
        if (type == RootType::B) {
            simple_.push_back(unit(l, l - 1));
            classical_roots(l, true, 2, positive_);
        } else if (type == RootType::C) {
            simple_.push_back(unit(l, l - 1, 4));
            classical_roots(l, true, 4, positive_);
        } else {
            simple_.push_back(add(unit(l, l - 2), unit(l, l - 1)));
            classical_roots(l, true, 0, positive_);
        }
        break;
    case RootType::G: {
        simple_ = {{2, -2, 0}, {-4, 2, 2}};
        const std::vector<std::vector<std::int64_t>> coeffs = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
        for (const auto &c : coeffs)
            positive_.push_back(combination(simple_, c));
        break;
    }
    case RootType::F:
        simple_ = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
        classical_roots(4, true, 2, positive_);
        for (int mask = 0; mask < 8; ++mask)
            positive_.push_back({1, mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1});
        break;
    case RootType::E: {
        // Coefficients are solved against the full E8 base and truncated below.
        simple_ = e8_simple();
        positive_ = e8_positive();
        break;
    }
    }

    // Simple-root coefficients from the Gram system (alpha_i, alpha_j) c = (beta, alpha_i).
    const std::size_t n = simple_.size();
    std::vector<std::vector<Frac>> gram(n, std::vector<Frac>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram[i][j] = Frac{inner(simple_[i], simple_[j]), 1};
    std::vector<Vec> kept;
    for (const auto &beta : positive_) {
        std::vector<Frac> rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = Frac{inner(beta, simple_[i]), 1};
        const auto x = solve(gram, rhs);
        Vec c(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].d != 1 || x[i].n < 0)
                throw InternalError("positive root is not a non-negative integer combination of simple roots");
            c[i] = static_cast<std::int64_t>(x[i].n);
        }
        if (combination(simple_, c) != beta)
            throw InternalError("root coefficient solve failed");
        // E6/E7: keep the E8 roots supported on the first `rank` simple roots.
        if (std::any_of(c.begin() + static_cast<std::ptrdiff_t>(l), c.end(), [](auto v) { return v != 0; }))
            continue;
        c.resize(l);
        kept.push_back(beta);
        coeffs_.push_back(std::move(c));
    }
    simple_.resize(l);
    positive_ = std::move(kept);
}

RootSystem RootSystem::parse(const std::string &name) {
    if (name.size() < 2 || !std::isdigit(static_cast<unsigned char>(name[1])))
        throw DomainError("bad group name '" + name + "' (expected e.g. E6, F4, C3)");
    const auto letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (letter < 'A' || letter > 'G')
        throw DomainError("bad group name '" + name + "'");
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || rank > 1000)
            throw DomainError("bad group name '" + name + "'");
        rank = rank * 10 + (name[i] - '0');
    }
    return RootSystem(static_cast<RootType>(letter - 'A'), rank);
}

std::string RootSystem::name() const { return type_letter(type_) + std::to_string(rank_); }

std::int64_t RootSystem::inner(const Vec &a, const Vec &b) const {
    return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

bool RootSystem::is_short(std::size_t i) const {
    std::int64_t shortest = inner(positive_.front(), positive_.front());
    for (const auto &r : positive_)
        shortest = std::min(shortest, inner(r, r));
    return inner(positive_[i], positive_[i]) == shortest;
}

std::size_t RootSystem::num_short_roots() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < positive_.size(); ++i)
        n += is_short(i);
    return 2 * n;
}

std::size_t RootSystem::num_short_simple_roots() const {
    std::int64_t shortest = inner(positive_.front(), positive_.front());
    for (const auto &r : positive_)
        shortest = std::min(shortest, inner(r, r));
    return static_cast<std::size_t>(
        std::count_if(simple_.begin(), simple_.end(), [&](const Vec &s) { return inner(s, s) == shortest; }));
}

bool RootSystem::simply_laced() const { return num_short_roots() == 2 * positive_.size(); }

RootSystem::Vec RootSystem::fundamental_coordinates(const Vec &beta) const {
    Vec out;
    for (const auto &s : simple_) {
        const auto num = 2 * inner(beta, s), den = inner(s, s);
        if (num % den != 0)
            throw InternalError("vector is not in the weight lattice");
        out.push_back(num / den);
    }
    return out;
}

Weight quasi_minuscule_weight(const RootSystem &rs) {
    std::size_t best = 0;
    std::int64_t best_height = -1;
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
        if (!rs.is_short(i))
            continue;
        const auto &c = rs.coefficients()[i];
        const auto h = std::accumulate(c.begin(), c.end(), std::int64_t{0});
        if (h > best_height) {
            best_height = h;
            best = i;
        }
    }
    return rs.fundamental_coordinates(rs.positive_roots()[best]);
}

std::int64_t weyl_dim(const RootSystem &rs, const Weight &lambda) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                          std::to_string(rs.rank()));
    for (auto x : lambda)
        if (x < 0)
            throw DomainError("weight is not dominant");
    std::vector<std::int64_t> norms;
    for (const auto &s : rs.simple_roots())
        norms.push_back(rs.inner(s, s));
    Frac dim{1, 1};
    for (const auto &c : rs.coefficients()) {
        __int128 num = 0, den = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            num += static_cast<__int128>(c[j]) * norms[j] * (lambda[j] + 1);
            den += static_cast<__int128>(c[j]) * norms[j];
        }
        dim = dim * Frac{num, den};
        if (dim.n > (static_cast<__int128>(1) << 100))
            throw DomainError("Weyl dimension overflow");
    }
    if (dim.d != 1)
        throw InternalError("Weyl dimension formula produced a non-integer");
    if (dim.n > std::numeric_limits<std::int64_t>::max())
        throw DomainError("Weyl dimension overflow");
    return static_cast<std::int64_t>(dim.n);
}

std::string render_weight(const Weight &w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (w[i] != 1)
            out += std::to_string(w[i]) + " ";
        out += "omega_" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

int trivial_count(WeylStructure s) noexcept {
    switch (s) {
    case WeylStructure::Irreducible:
        return 0;
    case WeylStructure::OneTrivial:
        return 1;
    case WeylStructure::TwoTrivial:
        return 2;
    }
    return 0;
}

std::string to_string(WeylStructure s) {
    switch (s) {
    case WeylStructure::Irreducible:
        return "Irreducible";
    case WeylStructure::OneTrivial:
        return "OneTrivial";
    case WeylStructure::TwoTrivial:
        return "TwoTrivial";
    }
    return "?";
}

QmStructure qm_structure(const RootSystem &rs, std::int64_t p) {
    require_prime(p);
    const std::int64_t l = rs.rank();
    WeylStructure s = WeylStructure::Irreducible;
    switch (rs.type()) {
    case RootType::A:
        if ((l + 1) % p == 0)
            s = WeylStructure::OneTrivial;
        break;
    case RootType::B:
        if (p == 2)
            s = WeylStructure::OneTrivial;
        break;
    case RootType::C:
        if (l % p == 0)
            s = WeylStructure::OneTrivial;
        break;
    case RootType::D:
        if (p == 2)
            s = l % 2 ? WeylStructure::OneTrivial : WeylStructure::TwoTrivial;
        break;
    case RootType::G:
        if (p == 2)
            s = WeylStructure::OneTrivial;
        break;
    case RootType::F:
        if (p == 3)
            s = WeylStructure::OneTrivial;
        break;
    case RootType::E:
        if ((l == 6 && p == 3) || (l == 7 && p == 2))
            s = WeylStructure::OneTrivial;
        break;
    }
    QmStructure q;
    q.lambda = quasi_minuscule_weight(rs);
    q.weyl_structure = s;
    const int k = trivial_count(s);
    switch (s) {
    case WeylStructure::Irreducible:
        q.weyl_series = q.tilting_series = "L(λ)";
        break;
    case WeylStructure::OneTrivial:
        q.weyl_series = "L(λ) | L(0)";
        q.tilting_series = "L(0) | L(λ) | L(0)";
        break;
    case WeylStructure::TwoTrivial:
        q.weyl_series = "L(λ) | L(0)^2";
        q.tilting_series = "L(0)^2 | L(λ) | L(0)^2";
        break;
    }
    q.dim_weyl = weyl_dim(rs, q.lambda);
    q.dim_irreducible = q.dim_weyl - k;
    q.dim_tilting = q.dim_weyl + k;
    return q;
}

} // namespace unip
