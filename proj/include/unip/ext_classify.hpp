#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unip/jordan_type.hpp"
#include "unip/module_expr.hpp"

namespace unip {

// Cline's criterion: Ext^1(L(lambda), L(mu)) != 0. When true the Ext group is
// one-dimensional.
bool ext1_nonzero(std::int64_t lambda, std::int64_t mu, std::int64_t p);

enum class ExtVerdictKind { NoExtension, WeylTwist, DualWeylTwist, ManyLargeBlocks };

/// Classification of the (unique) nonsplit extension with head L(lambda) and
/// socle L(mu). For the two Weyl cases, c and l locate it as V(c)^[l] or
/// (V(c)^*)^[l], and jordan is J_p + J_{c-p+1}.
struct ExtVerdict {
    ExtVerdictKind kind = ExtVerdictKind::NoExtension;
    std::int64_t c = 0;
    int l = 0;
    JordanType jordan;

    std::string to_string() const;
};

ExtVerdict nonsplit_ext_classify(std::int64_t lambda, std::int64_t mu, std::int64_t p);

enum class FamilyKind { Irreducible, Weyl, DualWeyl };

/// A family of indecomposable modules sharing one Jordan type. Families are
/// parametrized by Frobenius twist exponents and are never expanded.
struct ModuleFamily {
    FamilyKind kind;
    std::vector<int> digits;   // Irreducible: restricted digits, ascending
    std::int64_t c = 0;        // Weyl / DualWeyl: highest weight in [p, 2p-2]
    std::string templ;         // e.g. "L(2)[n1]*L(4)[n2]", "V(6)[l]"
    std::string constraint;    // e.g. "n1, n2 >= 0 pairwise distinct"

    // Concrete member for the given twist exponents (0 = untwisted).
    // Irreducible: one exponent per digit. Weyl kinds: a single exponent.
    ExprPtr instantiate(const std::vector<int> &twists) const;
};

// All indecomposable families with Jordan type t (at most one block of size p).
// Throws DomainError when t has two or more blocks of size p.
std::vector<ModuleFamily> enumerate_indecomposables(const JordanType &t, std::int64_t p);

/// p = 2 modules with u acting as J_2 + J_2.
struct Dim4Family {
    std::string label;       // "(i)", "(ii)", "(iii)"
    std::string templ;
    std::string constraint;
    bool irreducible;
    bool indecomposable;
    ExprPtr (*instantiate)(int n, int m);
};

std::vector<Dim4Family> classify_dim4_p2();

enum class SemisimplicityVerdict { ForcedSemisimple, Inconclusive };

// Only ever certifies semisimplicity; Inconclusive makes no claim either way.
SemisimplicityVerdict semisimplicity_verdict(const JordanType &t, bool self_dual, std::int64_t p);

std::string to_string(ExtVerdictKind k);
std::string to_string(FamilyKind k);
std::string to_string(SemisimplicityVerdict v);

} // namespace unip
