#include "doctest.h"

#include <random>

#include "unip/classical.hpp"
#include "unip/error.hpp"

using namespace unip;

namespace {
const auto SO = ClassicalGroup::SO;
const auto Sp = ClassicalGroup::Sp;
const auto SL = ClassicalGroup::SL;
} // namespace

TEST_CASE("group names") {
    CHECK(parse_classical_group("SO") == SO);
    CHECK(parse_classical_group("sp") == Sp);
    CHECK(to_string(SL) == "SL");
    CHECK_THROWS_AS(parse_classical_group("GL"), DomainError);
}

TEST_CASE("distinguished classes in good characteristic") {
    CHECK(is_distinguished(SO, 3, JordanType{3, 9, 15}, 27).distinguished);
    CHECK(is_distinguished(SL, 5, JordanType{7}, 7).distinguished);
    CHECK(is_distinguished(SL, 2, JordanType{7}, 7).distinguished);
    CHECK_FALSE(is_distinguished(SL, 5, JordanType{4, 3}, 7).distinguished);
    CHECK(is_distinguished(Sp, 3, JordanType{2, 4}, 6).distinguished);

    const auto rep = is_distinguished(SO, 3, JordanType{3, 3, 1}, 7);
    CHECK_FALSE(rep.distinguished);
    CHECK(rep.reason.find("multiplicity 2") != std::string::npos);
    const auto par = is_distinguished(Sp, 5, JordanType{3, 3}, 6);
    CHECK_FALSE(par.distinguished);
    CHECK(par.reason.find("odd size") != std::string::npos);
    CHECK_FALSE(is_distinguished(SO, 3, JordanType{3}, 3).requires_orthogonal_witness);
}

TEST_CASE("characteristic 2") {
    const auto t = JordanType::parse("16 14 10^2 8 6 2^2");
    CHECK(t.dim() == 68);
    const auto v = is_distinguished(Sp, 2, t, 68);
    CHECK(v.distinguished);
    CHECK(v.requires_orthogonal_witness);
    CHECK_FALSE(is_distinguished(Sp, 2, t, 68, true).requires_orthogonal_witness);

    const auto bad = is_distinguished(Sp, 2, JordanType{4, 4, 4}, 12);
    CHECK_FALSE(bad.distinguished);
    CHECK(bad.reason.find("multiplicity 3 > 2") != std::string::npos);

    CHECK_FALSE(is_distinguished(Sp, 2, JordanType{3, 3}, 6).distinguished);
    const auto even_distinct = is_distinguished(SO, 2, JordanType{2, 6}, 8);
    CHECK(even_distinct.distinguished);
    CHECK_FALSE(even_distinct.requires_orthogonal_witness);
    // Odd SO at p = 2 takes the type on V / V^perp.
    CHECK(is_distinguished(SO, 2, JordanType{2, 6}, 9).distinguished);
    CHECK_THROWS_AS(is_distinguished(SO, 2, JordanType{2, 6}, 10), DomainError);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(is_distinguished(Sp, 3, JordanType{3, 4}, 7), DomainError);
    CHECK_THROWS_AS(is_distinguished(SO, 3, JordanType{3, 9}, 27), DomainError);
    CHECK_THROWS_AS(is_distinguished(SO, 4, JordanType{3}, 3), DomainError);
}

TEST_CASE("Sp and SO exclude each other away from 2") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t p = i % 2 ? 3 : 7;
        JordanType t;
        const auto n = 1 + rng() % 4;
        for (std::uint64_t b = 0; b < n; ++b)
            t.add(1 + static_cast<std::int64_t>(rng() % 9));
        const bool so = is_distinguished(SO, p, t, t.dim()).distinguished;
        const bool sp = t.dim() % 2 == 0 && is_distinguished(Sp, p, t, t.dim()).distinguished;
        CHECK_FALSE((so && sp));
    }
}

TEST_CASE("orthogonality note") {
    CHECK(distinct_even_orthogonality_note(JordanType{2, 6}));
    CHECK_FALSE(distinct_even_orthogonality_note(JordanType{2, 2}));
    CHECK(distinct_even_orthogonality_note(JordanType{2, 8, 10, 16, 18, 22, 26, 32}));
    CHECK_FALSE(distinct_even_orthogonality_note(JordanType{3, 8}));
}

TEST_CASE("lift from the quotient by a nonsingular vector") {
    CHECK(lift_quotient_to_orthogonal(JordanType{6}) == JordanType{2, 6});
    const JordanType e7{8, 10, 16, 18, 22, 26, 32};
    CHECK(lift_quotient_to_orthogonal(e7) == JordanType{2, 8, 10, 16, 18, 22, 26, 32});
    CHECK(lift_quotient_to_orthogonal(JordanType{4, 2}) == JordanType{1, 1, 2, 4});
    CHECK_THROWS_AS(lift_quotient_to_orthogonal(JordanType{6}, 3), DomainError);
}

TEST_CASE("lift preserves the criterion under its hypotheses") {
    // Odd block count, multiplicities <= 2, J_2 at most once.
    std::mt19937_64 rng(12);
    int tried = 0;
    while (tried < 500) {
        JordanType q;
        const auto n = 1 + rng() % 7;
        for (std::uint64_t b = 0; b < n; ++b)
            q.add(2 * (1 + static_cast<std::int64_t>(rng() % 8)));
        if (q.num_blocks() % 2 == 0 || q.multiplicity(2) > 1)
            continue;
        if (!is_distinguished(Sp, 2, q, q.dim()).distinguished)
            continue;
        ++tried;
        const auto lifted = lift_quotient_to_orthogonal(q);
        CHECK(lifted.dim() == q.dim() + 2);
        CHECK(is_distinguished(Sp, 2, lifted, lifted.dim()).distinguished);
    }
}

TEST_CASE("regular elements of B_{l-1} in Sp_{2l}") {
    for (int l = 2; l <= 20; ++l) {
        const auto ex = bminus1_family(l);
        CHECK(ex.quotient == JordanType{2 * l - 2});
        CHECK(ex.lifted == JordanType{2, 2 * l - 2});
        CHECK(ex.space_dim == 2 * l);
        CHECK(ex.distinguished);
    }
    CHECK(bminus1_family(4).lifted == JordanType{2, 6});
    CHECK(bminus1_family(9).lifted == JordanType{2, 16});
    CHECK(bminus1_family(2).lifted == JordanType{2, 2});
    CHECK_THROWS_AS(bminus1_family(1), DomainError);
}
