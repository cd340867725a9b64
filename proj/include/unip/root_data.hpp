#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unip {

enum class RootType { A, B, C, D, E, F, G };

/// A simple root system with Bourbaki labelling.
///
/// Roots are kept in an ambient orthonormal basis with all coordinates doubled
/// (so E8 and F4 half-integers become integers), together with their
/// coefficients in the simple roots.
class RootSystem {
  public:
    using Vec = std::vector<std::int64_t>;

    // Throws DomainError outside A_l (l>=1), B_l/C_l (l>=2), D_l (l>=4),
    // E6-E8, F4, G2.
    RootSystem(RootType type, int rank);
    // "F4", "E6", "C3", "D12" ...
    static RootSystem parse(const std::string &name);

    RootType type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string name() const;

    const std::vector<Vec> &simple_roots() const noexcept { return simple_; }
    const std::vector<Vec> &positive_roots() const noexcept { return positive_; }
    // coefficients()[i][j]: coefficient of simple root j in positive root i.
    const std::vector<Vec> &coefficients() const noexcept { return coeffs_; }

    std::int64_t inner(const Vec &a, const Vec &b) const;
    bool is_short(std::size_t root_index) const;
    std::size_t num_short_roots() const; // positive and negative
    std::size_t num_short_simple_roots() const;
    bool simply_laced() const;

    // <beta, alpha_j^vee> for each simple root j.
    Vec fundamental_coordinates(const Vec &beta) const;

    std::int64_t adjoint_dim() const { return 2 * static_cast<std::int64_t>(positive_.size()) + rank_; }

  private:
    RootType type_;
    int rank_;
    std::vector<Vec> simple_;
    std::vector<Vec> positive_;
    std::vector<Vec> coeffs_;
};

// Dominant weight in fundamental-weight coordinates.
using Weight = std::vector<std::int64_t>;

// Highest short root, in fundamental-weight coordinates.
Weight quasi_minuscule_weight(const RootSystem &rs);

// Weyl's dimension formula, exact. Throws DomainError for non-dominant input
// or overflow.
std::int64_t weyl_dim(const RootSystem &rs, const Weight &lambda);

// "omega_1 + omega_4", "0"
std::string render_weight(const Weight &w);

enum class WeylStructure { Irreducible, OneTrivial, TwoTrivial };

struct QmStructure {
    Weight lambda;
    WeylStructure weyl_structure;
    std::string weyl_series;    // "L(λ) | L(0)"
    std::string tilting_series; // "L(0) | L(λ) | L(0)"
    std::int64_t dim_weyl;
    std::int64_t dim_irreducible;
    std::int64_t dim_tilting;
};

int trivial_count(WeylStructure s) noexcept;
std::string to_string(WeylStructure s);

QmStructure qm_structure(const RootSystem &rs, std::int64_t p);

} // namespace unip
