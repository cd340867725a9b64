#include "unip/module_expr.hpp"

#include <algorithm>

#include "unip/error.hpp"

namespace unip {

char atom_letter(AtomKind kind) noexcept {
    switch (kind) {
    case AtomKind::Irreducible:
        return 'L';
    case AtomKind::Weyl:
        return 'V';
    case AtomKind::Tilting:
        return 'T';
    }
    return '?';
}

ExprPtr make_atom(AtomKind kind, std::int64_t weight) {
    if (weight < 0)
        throw DomainError("atom weight must be non-negative");
    return std::make_shared<const ModuleExpr>(ModuleExpr::Atom{kind, weight});
}

ExprPtr make_sum(ExprPtr left, ExprPtr right) {
    return std::make_shared<const ModuleExpr>(ModuleExpr::Sum{std::move(left), std::move(right)});
}

ExprPtr make_tensor(ExprPtr left, ExprPtr right) {
    return std::make_shared<const ModuleExpr>(ModuleExpr::Tensor{std::move(left), std::move(right)});
}

ExprPtr make_dual(ExprPtr inner) { return std::make_shared<const ModuleExpr>(ModuleExpr::Dual{std::move(inner)}); }

ExprPtr make_twist(ExprPtr inner, int exponent) {
    if (exponent < 1)
        throw DomainError("twist exponent must be >= 1");
    return std::make_shared<const ModuleExpr>(ModuleExpr::Twist{std::move(inner), exponent});
}

bool equal(const ModuleExpr &a, const ModuleExpr &b) {
    if (a.node().index() != b.node().index())
        return false;
    if (auto x = a.as<ModuleExpr::Atom>()) {
        auto y = b.as<ModuleExpr::Atom>();
        return x->kind == y->kind && x->weight == y->weight;
    }
    if (auto x = a.as<ModuleExpr::Sum>()) {
        auto y = b.as<ModuleExpr::Sum>();
        return equal(*x->left, *y->left) && equal(*x->right, *y->right);
    }
    if (auto x = a.as<ModuleExpr::Tensor>()) {
        auto y = b.as<ModuleExpr::Tensor>();
        return equal(*x->left, *y->left) && equal(*x->right, *y->right);
    }
    if (auto x = a.as<ModuleExpr::Dual>())
        return equal(*x->inner, *b.as<ModuleExpr::Dual>()->inner);
    auto x = a.as<ModuleExpr::Twist>();
    auto y = b.as<ModuleExpr::Twist>();
    return x->exponent == y->exponent && equal(*x->inner, *y->inner);
}

namespace {

// Binding strength: sums bind loosest, then tensors, then suffixes.
int precedence(const ModuleExpr &e) {
    if (e.as<ModuleExpr::Sum>())
        return 1;
    if (e.as<ModuleExpr::Tensor>())
        return 2;
    if (e.as<ModuleExpr::Atom>())
        return 4;
    return 3;
}

void render_into(const ModuleExpr &e, int min_prec, std::string &out) {
    const bool parens = precedence(e) < min_prec;
    if (parens)
        out += '(';
    if (auto a = e.as<ModuleExpr::Atom>()) {
        out += atom_letter(a->kind);
        out += '(' + std::to_string(a->weight) + ')';
    } else if (auto s = e.as<ModuleExpr::Sum>()) {
        render_into(*s->left, 1, out);
        out += '+';
        render_into(*s->right, 2, out);
    } else if (auto t = e.as<ModuleExpr::Tensor>()) {
        render_into(*t->left, 2, out);
        out += '*';
        render_into(*t->right, 3, out);
    } else if (auto d = e.as<ModuleExpr::Dual>()) {
        render_into(*d->inner, 3, out);
        out += "^*";
    } else {
        auto w = e.as<ModuleExpr::Twist>();
        render_into(*w->inner, 3, out);
        out += '[' + std::to_string(w->exponent) + ']';
    }
    if (parens)
        out += ')';
}

} // namespace

std::string render(const ModuleExpr &e) {
    std::string out;
    render_into(e, 0, out);
    return out;
}

bool contains_tilting(const ModuleExpr &e) {
    return std::visit(
        [](const auto &n) -> bool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, ModuleExpr::Atom>)
                return n.kind == AtomKind::Tilting;
            else if constexpr (std::is_same_v<N, ModuleExpr::Sum> || std::is_same_v<N, ModuleExpr::Tensor>)
                return contains_tilting(*n.left) || contains_tilting(*n.right);
            else
                return contains_tilting(*n.inner);
        },
        e.node());
}

int depth(const ModuleExpr &e) {
    return std::visit(
        [](const auto &n) -> int {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, ModuleExpr::Atom>)
                return 0;
            else if constexpr (std::is_same_v<N, ModuleExpr::Sum> || std::is_same_v<N, ModuleExpr::Tensor>)
                return 1 + std::max(depth(*n.left), depth(*n.right));
            else
                return 1 + depth(*n.inner);
        },
        e.node());
}

} // namespace unip
