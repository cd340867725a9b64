#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

namespace unip {

enum class AtomKind { Irreducible, Weyl, Tilting };

char atom_letter(AtomKind kind) noexcept;

class ModuleExpr;
using ExprPtr = std::shared_ptr<const ModuleExpr>;

/// Expression over SL2-modules: atoms L(n), V(n), T(n) combined by direct sum,
/// tensor product, dual and Frobenius twist. Immutable; subtrees are shared.
class ModuleExpr {
  public:
    struct Atom {
        AtomKind kind;
        std::int64_t weight;
    };
    struct Sum {
        ExprPtr left, right;
    };
    struct Tensor {
        ExprPtr left, right;
    };
    struct Dual {
        ExprPtr inner;
    };
    struct Twist {
        ExprPtr inner;
        int exponent;
    };
    using Node = std::variant<Atom, Sum, Tensor, Dual, Twist>;

    explicit ModuleExpr(Node node) : node_(std::move(node)) {}

    const Node &node() const noexcept { return node_; }

    template <class T> const T *as() const noexcept { return std::get_if<T>(&node_); }

  private:
    Node node_;
};

ExprPtr make_atom(AtomKind kind, std::int64_t weight);
ExprPtr make_sum(ExprPtr left, ExprPtr right);
ExprPtr make_tensor(ExprPtr left, ExprPtr right);
ExprPtr make_dual(ExprPtr inner);
ExprPtr make_twist(ExprPtr inner, int exponent);

inline ExprPtr L(std::int64_t w) { return make_atom(AtomKind::Irreducible, w); }
inline ExprPtr V(std::int64_t w) { return make_atom(AtomKind::Weyl, w); }
inline ExprPtr T(std::int64_t w) { return make_atom(AtomKind::Tilting, w); }

// Structural equality (ignores sharing).
bool equal(const ModuleExpr &a, const ModuleExpr &b);

// Minimal-parenthesis rendering in the parser's grammar; parse(render(e)) == e.
std::string render(const ModuleExpr &e);

bool contains_tilting(const ModuleExpr &e);
int depth(const ModuleExpr &e);

} // namespace unip
