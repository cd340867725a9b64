#include "unip/classical.hpp"

#include <cctype>

#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

ClassicalGroup parse_classical_group(const std::string &name) {
    std::string upper = name;
    for (auto &ch : upper)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "SL")
        return ClassicalGroup::SL;
    if (upper == "SP")
        return ClassicalGroup::Sp;
    if (upper == "SO")
        return ClassicalGroup::SO;
    throw DomainError("unknown classical group '" + name + "' (expected SL, Sp or SO)");
}

std::string to_string(ClassicalGroup g) {
    switch (g) {
    case ClassicalGroup::SL:
        return "SL";
    case ClassicalGroup::Sp:
        return "Sp";
    case ClassicalGroup::SO:
        return "SO";
    }
    return "?";
}

namespace {

std::string block(std::int64_t s) { return "J_" + std::to_string(s); }

} // namespace

DistinguishedVerdict is_distinguished(ClassicalGroup group, std::int64_t p, const JordanType &t,
                                      std::int64_t space_dim, bool attested_orthogonal) {
    require_prime(p);
    if (space_dim < 1)
        throw DomainError("space dimension must be positive");
    if (group == ClassicalGroup::Sp && space_dim % 2 != 0)
        throw DomainError("symplectic spaces have even dimension, got " + std::to_string(space_dim));
    // p = 2, odd-dimensional SO: the type lives on Z = V / V^perp.
    const bool quotient = group == ClassicalGroup::SO && p == 2 && space_dim % 2 != 0;
    const auto expected = quotient ? space_dim - 1 : space_dim;
    if (t.dim() != expected)
        throw DomainError("Jordan type has dimension " + std::to_string(t.dim()) + " but " +
                          (quotient ? "V/V^perp" : "V") + " has dimension " + std::to_string(expected));

    DistinguishedVerdict v;
    if (group == ClassicalGroup::SL) {
        if (t.num_blocks() != 1)
            v.reason = "not a single Jordan block J_" + std::to_string(space_dim);
        v.distinguished = v.reason.empty();
        return v;
    }
    if (p != 2) {
        const int parity = group == ClassicalGroup::Sp ? 0 : 1;
        for (auto [s, m] : t.blocks()) {
            if (s % 2 != parity) {
                v.reason = block(s) + " has " + (parity ? "even" : "odd") + " size";
                break;
            }
            if (m > 1) {
                v.reason = block(s) + " repeated (multiplicity " + std::to_string(m) + ")";
                break;
            }
        }
        v.distinguished = v.reason.empty();
        return v;
    }
    for (auto [s, m] : t.blocks()) {
        if (s % 2 != 0) {
            v.reason = block(s) + " has odd size";
            break;
        }
        if (m > 2) {
            v.reason = "multiplicity " + std::to_string(m) + " > 2 for " + block(s);
            break;
        }
    }
    v.distinguished = v.reason.empty();
    v.requires_orthogonal_witness = v.distinguished && !attested_orthogonal && !distinct_even_orthogonality_note(t);
    return v;
}

bool distinct_even_orthogonality_note(const JordanType &t) {
    for (auto [s, m] : t.blocks())
        if (s % 2 != 0 || m != 1)
            return false;
    return true;
}

JordanType lift_quotient_to_orthogonal(const JordanType &quotient, std::int64_t p) {
    if (p != 2)
        throw DomainError("the orthogonal lift is a characteristic 2 construction");
    JordanType out = quotient;
    if (quotient.num_blocks() % 2 == 0)
        out.add(1, 2);
    else
        out.add(2);
    return out;
}

BMinus1Example bminus1_family(int l) {
    if (l < 2)
        throw DomainError("B_{l-1} family needs l >= 2");
    BMinus1Example ex;
    ex.quotient = JordanType{2 * static_cast<std::int64_t>(l) - 2};
    ex.lifted = lift_quotient_to_orthogonal(ex.quotient, 2);
    ex.space_dim = 2 * static_cast<std::int64_t>(l);
    ex.distinguished = is_distinguished(ClassicalGroup::Sp, 2, ex.lifted, ex.space_dim).distinguished;
    return ex;
}

} // namespace unip
