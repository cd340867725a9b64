#pragma once

#include <cstdint>
#include <string>

#include "unip/jordan_type.hpp"

namespace unip {

enum class ClassicalGroup { SL, Sp, SO };

ClassicalGroup parse_classical_group(const std::string &name);
std::string to_string(ClassicalGroup g);

struct DistinguishedVerdict {
    bool distinguished = false;
    // Empty when distinguished; names the violated clause otherwise.
    std::string reason;
    // p = 2, Sp/SO: the Jordan type passes but distinguishedness also needs an
    // orthogonal decomposition into the listed blocks, which the partition
    // alone does not certify.
    bool requires_orthogonal_witness = false;
};

/// Distinguishedness of a unipotent class from its Jordan type on the natural
/// module. For SO with p = 2 and odd space_dim, t is the type on V / V^perp
/// (dimension space_dim - 1). attested_orthogonal records a caller-supplied
/// orthogonal decomposition. Throws DomainError on dimension mismatch or an
/// odd-dimensional symplectic space.
DistinguishedVerdict is_distinguished(ClassicalGroup group, std::int64_t p, const JordanType &t,
                                      std::int64_t space_dim, bool attested_orthogonal = false);

// p = 2: all blocks even and pairwise distinct, in which case the Jordan form
// alone guarantees an orthogonal decomposition.
bool distinct_even_orthogonality_note(const JordanType &t);

// p = 2: type on V from the type on <v>^perp / <v> for a nonsingular vector v.
// Appends 2 J_1 when the block count is even and J_2 when it is odd.
JordanType lift_quotient_to_orthogonal(const JordanType &quotient, std::int64_t p = 2);

struct BMinus1Example {
    JordanType quotient;
    JordanType lifted;
    std::int64_t space_dim;
    bool distinguished;
};

// Regular unipotent of B_{l-1} inside Sp_{2l}, p = 2, l >= 2.
BMinus1Example bminus1_family(int l);

} // namespace unip
