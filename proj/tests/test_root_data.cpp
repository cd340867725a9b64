#include "doctest.h"

#include "unip/error.hpp"
#include "unip/root_data.hpp"

using namespace unip;

namespace {

Weight omega(int rank, int i) {
    Weight w(static_cast<std::size_t>(rank), 0);
    w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

std::size_t expected_positive(RootType t, int l) {
    switch (t) {
    case RootType::A:
        return static_cast<std::size_t>(l * (l + 1) / 2);
    case RootType::B:
    case RootType::C:
        return static_cast<std::size_t>(l * l);
    case RootType::D:
        return static_cast<std::size_t>(l * (l - 1));
    case RootType::E:
        return l == 6 ? 36 : l == 7 ? 63 : 120;
    case RootType::F:
        return 24;
    case RootType::G:
        return 6;
    }
    return 0;
}

std::vector<RootSystem> all_systems(int max_rank) {
    std::vector<RootSystem> out;
    for (int l = 1; l <= max_rank; ++l)
        out.emplace_back(RootType::A, l);
    for (int l = 2; l <= max_rank; ++l) {
        out.emplace_back(RootType::B, l);
        out.emplace_back(RootType::C, l);
    }
    for (int l = 4; l <= max_rank; ++l)
        out.emplace_back(RootType::D, l);
    for (int l = 6; l <= 8; ++l)
        out.emplace_back(RootType::E, l);
    out.emplace_back(RootType::F, 4);
    out.emplace_back(RootType::G, 2);
    return out;
}

} // namespace

TEST_CASE("root system construction") {
    for (const auto &rs : all_systems(12)) {
        INFO(rs.name());
        CHECK(rs.positive_roots().size() == expected_positive(rs.type(), rs.rank()));
        CHECK(rs.coefficients().size() == rs.positive_roots().size());
        CHECK(rs.simple_roots().size() == static_cast<std::size_t>(rs.rank()));
        for (const auto &c : rs.coefficients())
            for (auto x : c)
                CHECK(x >= 0);
    }
    CHECK(RootSystem::parse("F4").name() == "F4");
    CHECK(RootSystem::parse("d12").name() == "D12");
    CHECK_THROWS_AS(RootSystem::parse("D3"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("E9"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("B1"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("X2"), DomainError);
    CHECK_THROWS_AS(RootSystem::parse("F"), DomainError);
    CHECK(RootSystem::parse("E8").simply_laced());
    CHECK_FALSE(RootSystem::parse("C3").simply_laced());
}

TEST_CASE("quasi-minuscule weights") {
    CHECK(quasi_minuscule_weight(RootSystem::parse("F4")) == omega(4, 4));
    CHECK(quasi_minuscule_weight(RootSystem::parse("C3")) == omega(3, 2));
    CHECK(quasi_minuscule_weight(RootSystem::parse("E8")) == omega(8, 8));
    CHECK(quasi_minuscule_weight(RootSystem::parse("E7")) == omega(7, 1));
    CHECK(quasi_minuscule_weight(RootSystem::parse("E6")) == omega(6, 2));
    CHECK(quasi_minuscule_weight(RootSystem::parse("G2")) == omega(2, 1));
    for (int l = 2; l <= 12; ++l) {
        CHECK(quasi_minuscule_weight(RootSystem(RootType::B, l)) == omega(l, 1));
        CHECK(quasi_minuscule_weight(RootSystem(RootType::C, l)) == omega(l, 2));
        auto a = omega(l, 1);
        a[static_cast<std::size_t>(l - 1)] = 1;
        CHECK(quasi_minuscule_weight(RootSystem(RootType::A, l)) == a);
    }
    CHECK(quasi_minuscule_weight(RootSystem(RootType::A, 1)) == Weight{2});
    CHECK(render_weight(quasi_minuscule_weight(RootSystem(RootType::A, 4))) == "omega_1 + omega_4");
    CHECK(render_weight({0, 2}) == "2 omega_2");
    CHECK(render_weight({0, 0}) == "0");
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim(RootSystem::parse("F4"), omega(4, 4)) == 26);
    CHECK(weyl_dim(RootSystem::parse("E7"), omega(7, 1)) == 133);
    CHECK(weyl_dim(RootSystem::parse("E7"), omega(7, 7)) == 56);
    CHECK(weyl_dim(RootSystem::parse("E6"), omega(6, 2)) == 78);
    CHECK(weyl_dim(RootSystem::parse("E6"), omega(6, 1)) == 27);
    CHECK(weyl_dim(RootSystem::parse("G2"), omega(2, 1)) == 7);
    CHECK(weyl_dim(RootSystem::parse("G2"), omega(2, 2)) == 14);
    CHECK(weyl_dim(RootSystem::parse("E8"), omega(8, 8)) == 248);
    CHECK(weyl_dim(RootSystem::parse("E8"), omega(8, 1)) == 3875);
    CHECK(weyl_dim(RootSystem::parse("F4"), omega(4, 1)) == 52);
    for (const auto &rs : all_systems(8))
        CHECK(weyl_dim(rs, Weight(static_cast<std::size_t>(rs.rank()), 0)) == 1);
    CHECK_THROWS_AS(weyl_dim(RootSystem::parse("G2"), {-1, 0}), DomainError);
    CHECK_THROWS_AS(weyl_dim(RootSystem::parse("G2"), {1}), DomainError);
    // V(rho) has dimension 2^(number of positive roots).
    CHECK(weyl_dim(RootSystem::parse("A2"), {1, 1}) == 8);
    CHECK(weyl_dim(RootSystem::parse("G2"), {1, 1}) == 64);
    CHECK_THROWS_AS(weyl_dim(RootSystem::parse("E8"), Weight(8, 1)), DomainError);
}

TEST_CASE("classical closed forms up to rank 12") {
    for (int l = 1; l <= 12; ++l) {
        RootSystem a(RootType::A, l);
        CHECK(weyl_dim(a, omega(l, 1)) == l + 1);
        CHECK(weyl_dim(a, quasi_minuscule_weight(a)) == l * l + 2 * l);
        if (l >= 2) {
            RootSystem b(RootType::B, l), c(RootType::C, l);
            CHECK(weyl_dim(b, omega(l, 1)) == 2 * l + 1);
            // omega_2 is the spin weight in rank 2 and adjoint above.
            CHECK(weyl_dim(b, omega(l, 2)) == (l == 2 ? 4 : l * (2 * l + 1)));
            CHECK(weyl_dim(c, omega(l, 1)) == 2 * l);
            CHECK(weyl_dim(c, omega(l, 2)) == 2 * l * l - l - 1);
            CHECK(weyl_dim(b, omega(l, l)) == std::int64_t{1} << l);
        }
        if (l >= 4) {
            RootSystem d(RootType::D, l);
            CHECK(weyl_dim(d, omega(l, 1)) == 2 * l);
            CHECK(weyl_dim(d, omega(l, 2)) == 2 * l * l - l);
            CHECK(weyl_dim(d, omega(l, l)) == std::int64_t{1} << (l - 1));
        }
    }
}

TEST_CASE("quasi-minuscule dimension counts zero weights") {
    for (const auto &rs : all_systems(12)) {
        INFO(rs.name());
        const auto qm = quasi_minuscule_weight(rs);
        CHECK(weyl_dim(rs, qm) ==
              static_cast<std::int64_t>(rs.num_short_roots() + rs.num_short_simple_roots()));
        if (rs.simply_laced())
            CHECK(weyl_dim(rs, qm) == rs.adjoint_dim());
    }
}

TEST_CASE("structure of the quasi-minuscule Weyl module") {
    const auto f4 = qm_structure(RootSystem::parse("F4"), 3);
    CHECK(f4.weyl_structure == WeylStructure::OneTrivial);
    CHECK(f4.dim_tilting == 27);
    CHECK(f4.dim_irreducible == 25);
    CHECK(f4.tilting_series == "L(0) | L(λ) | L(0)");
    CHECK(qm_structure(RootSystem::parse("F4"), 2).weyl_structure == WeylStructure::Irreducible);

    for (std::int64_t p : {2, 3, 5, 7, 11}) {
        const auto e8 = qm_structure(RootSystem::parse("E8"), p);
        CHECK(e8.weyl_structure == WeylStructure::Irreducible);
        CHECK(e8.dim_tilting == 248);
    }

    const auto d6 = qm_structure(RootSystem::parse("D6"), 2);
    CHECK(d6.weyl_structure == WeylStructure::TwoTrivial);
    CHECK(d6.dim_tilting == 68);
    CHECK(d6.weyl_series == "L(λ) | L(0)^2");
    CHECK(qm_structure(RootSystem::parse("D5"), 2).weyl_structure == WeylStructure::OneTrivial);
    CHECK(qm_structure(RootSystem::parse("D5"), 3).weyl_structure == WeylStructure::Irreducible);

    CHECK(qm_structure(RootSystem::parse("G2"), 2).dim_tilting == 8);
    CHECK(qm_structure(RootSystem::parse("E7"), 2).dim_tilting == 134);
    CHECK(qm_structure(RootSystem::parse("E6"), 3).weyl_structure == WeylStructure::OneTrivial);
    CHECK(qm_structure(RootSystem::parse("A4"), 5).weyl_structure == WeylStructure::OneTrivial);
    CHECK(qm_structure(RootSystem::parse("A4"), 3).weyl_structure == WeylStructure::Irreducible);
    CHECK(qm_structure(RootSystem::parse("C6"), 3).weyl_structure == WeylStructure::OneTrivial);
    CHECK(qm_structure(RootSystem::parse("C6"), 5).weyl_structure == WeylStructure::Irreducible);
    CHECK(qm_structure(RootSystem::parse("B4"), 2).weyl_structure == WeylStructure::OneTrivial);
    CHECK_THROWS_AS(qm_structure(RootSystem::parse("B4"), 4), DomainError);

    for (const auto &rs : all_systems(10))
        for (std::int64_t p : {2, 3, 5, 7}) {
            const auto q = qm_structure(rs, p);
            const int k = trivial_count(q.weyl_structure);
            CHECK(q.dim_irreducible + k == q.dim_weyl);
            CHECK(q.dim_weyl == q.dim_tilting - k);
        }
}
