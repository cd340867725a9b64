#include "unip/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "unip/error.hpp"

namespace unip {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::int64_t nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a non-negative integer");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
                fail("integer too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    ExprPtr expr() {
        auto left = term();
        while (accept('+'))
            left = make_sum(left, term());
        return left;
    }

    ExprPtr term() {
        auto left = factor();
        while (accept('*'))
            left = make_tensor(left, factor());
        return left;
    }

    ExprPtr factor() {
        auto e = atom();
        for (;;) {
            skip_ws();
            if (accept('^')) {
                expect('*');
                e = make_dual(e);
            } else if (accept('[')) {
                std::size_t at = pos_;
                auto k = nat();
                if (k < 1 || k > std::numeric_limits<int>::max()) {
                    pos_ = at;
                    fail("twist exponent must be a positive integer");
                }
                expect(']');
                e = make_twist(e, static_cast<int>(k));
            } else {
                return e;
            }
        }
    }

    ExprPtr atom() {
        skip_ws();
        if (accept('(')) {
            auto e = expr();
            expect(')');
            return e;
        }
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        AtomKind kind;
        switch (text_[pos_]) {
        case 'L':
            kind = AtomKind::Irreducible;
            break;
        case 'V':
            kind = AtomKind::Weyl;
            break;
        case 'T':
            kind = AtomKind::Tilting;
            break;
        default:
            fail(std::string("expected L, V, T or '(' but found '") + text_[pos_] + "'");
        }
        ++pos_;
        expect('(');
        auto w = nat();
        expect(')');
        return make_atom(kind, w);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace unip
