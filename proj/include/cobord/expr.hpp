#pragma once

#include <cctype>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/* Formal class expressions over good-variety atoms:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := INT | atom | factor '^' INT | '(' expr ')'
 *   atom   := CP(n) | H(i,j) | Sigma(g) | BlCP(n,k)
 *
 * An integer literal is a dimension-0 class (a signed point count), so
 * "2*CP(2)" scales through the ring product. '+' and '-' require equal
 * dimensions, except that an identically zero side adapts to the other
 * side's dimension (so "0 - CP(2)" negates).
 */
class ClassExpr {
public:
    enum class Kind { Int, Atom, Add, Sub, Mul, Pow };

    Kind kind;
    Integer literal;                  // Int
    GoodVariety atom = CP{1};         // Atom
    std::shared_ptr<ClassExpr> lhs;   // Add/Sub/Mul, Pow base
    std::shared_ptr<ClassExpr> rhs;   // Add/Sub/Mul
    int exponent = 0;                 // Pow

    static std::shared_ptr<ClassExpr> integer(Integer v) {
        auto e = std::make_shared<ClassExpr>();
        e->kind = Kind::Int;
        e->literal = std::move(v);
        return e;
    }
    static std::shared_ptr<ClassExpr> variety(GoodVariety v) {
        auto e = std::make_shared<ClassExpr>();
        e->kind = Kind::Atom;
        e->atom = std::move(v);
        return e;
    }
    static std::shared_ptr<ClassExpr> binary(Kind k, std::shared_ptr<ClassExpr> a,
                                             std::shared_ptr<ClassExpr> b) {
        auto e = std::make_shared<ClassExpr>();
        e->kind = k;
        e->lhs = std::move(a);
        e->rhs = std::move(b);
        return e;
    }
    static std::shared_ptr<ClassExpr> power(std::shared_ptr<ClassExpr> base, int exp) {
        auto e = std::make_shared<ClassExpr>();
        e->kind = Kind::Pow;
        e->lhs = std::move(base);
        e->exponent = exp;
        return e;
    }
};

using ClassExprPtr = std::shared_ptr<ClassExpr>;

inline bool expr_equal(const ClassExpr& a, const ClassExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ClassExpr::Kind::Int: return a.literal == b.literal;
        case ClassExpr::Kind::Atom: return variety_equal(a.atom, b.atom);
        case ClassExpr::Kind::Pow:
            return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
        default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    ClassExprPtr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col),
                         line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : -1;
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer read_int() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    std::string read_name() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    ClassExprPtr expr() {
        auto e = term();
        for (;;) {
            if (consume('+')) {
                e = ClassExpr::binary(ClassExpr::Kind::Add, std::move(e), term());
            } else if (consume('-')) {
                e = ClassExpr::binary(ClassExpr::Kind::Sub, std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ClassExprPtr term() {
        auto e = factor();
        while (consume('*')) e = ClassExpr::binary(ClassExpr::Kind::Mul, std::move(e), factor());
        return e;
    }

    ClassExprPtr factor() {
        ClassExprPtr e;
        const int c = peek();
        if (c == '(') {
            consume('(');
            e = expr();
            if (!consume(')')) fail("expected ')'");
        } else if (std::isdigit(c)) {
            e = ClassExpr::integer(read_int());
        } else if (std::isalpha(c)) {
            e = atom();
        } else {
            fail("expected an integer, an atom or '('");
        }
        while (consume('^')) {
            const size_t at = pos_;
            const Integer exp = read_int();
            if (exp < 1) {
                pos_ = at;
                fail("exponent must be >= 1");
            }
            e = ClassExpr::power(std::move(e), exp.convert_to<int>());
        }
        return e;
    }

    ClassExprPtr atom() {
        const size_t name_at = pos_;
        const std::string name = read_name();
        if (name != "CP" && name != "H" && name != "Sigma" && name != "BlCP") {
            pos_ = name_at;
            fail("unknown atom '" + name + "'");
        }
        if (!consume('(')) fail("expected '(' after '" + name + "'");
        std::vector<int> args;
        args.push_back(read_int().convert_to<int>());
        while (consume(',')) args.push_back(read_int().convert_to<int>());
        if (!consume(')')) fail("expected ')' after arguments of '" + name + "'");

        GoodVariety v;
        if (name == "CP" && args.size() == 1) v = CP{args[0]};
        else if (name == "H" && args.size() == 2) v = MilnorH{args[0], args[1]};
        else if (name == "Sigma" && args.size() == 1) v = Sigma{args[0]};
        else if (name == "BlCP" && args.size() == 2) v = BlowUpCP{args[0], args[1]};
        else {
            pos_ = name_at;
            fail("wrong number of arguments for '" + name + "'");
        }
        try {
            validate_variety(v);
        } catch (const Error& e) {
            pos_ = name_at;
            fail(e.what());
        }
        return ClassExpr::variety(std::move(v));
    }
};

} // namespace detail

inline ClassExprPtr parse_class_expr(const std::string& text) {
    return detail::ExprParser(text).parse();
}

inline std::string pretty_print(const ClassExpr& e) {
    switch (e.kind) {
        case ClassExpr::Kind::Int: return e.literal.str();
        case ClassExpr::Kind::Atom: return to_string(e.atom);
        case ClassExpr::Kind::Pow: {
            const bool wrap = e.lhs->kind != ClassExpr::Kind::Int &&
                              e.lhs->kind != ClassExpr::Kind::Atom;
            const std::string base = pretty_print(*e.lhs);
            return (wrap ? "(" + base + ")" : base) + "^" + std::to_string(e.exponent);
        }
        case ClassExpr::Kind::Mul: {
            const auto wrap = [](const ClassExpr& s) {
                return s.kind == ClassExpr::Kind::Add || s.kind == ClassExpr::Kind::Sub;
            };
            const std::string l = pretty_print(*e.lhs);
            const std::string r = pretty_print(*e.rhs);
            return (wrap(*e.lhs) ? "(" + l + ")" : l) + " * " +
                   (wrap(*e.rhs) ? "(" + r + ")" : r);
        }
        case ClassExpr::Kind::Add:
        case ClassExpr::Kind::Sub: {
            const std::string op = e.kind == ClassExpr::Kind::Add ? " + " : " - ";
            const std::string l = pretty_print(*e.lhs);
            std::string r = pretty_print(*e.rhs);
            const bool wrap_r = e.rhs->kind == ClassExpr::Kind::Add ||
                                e.rhs->kind == ClassExpr::Kind::Sub;
            return l + op + (wrap_r ? "(" + r + ")" : r);
        }
    }
    throw InternalError("unhandled expression kind");
}

inline ChernVector evaluate(const ClassExpr& e) {
    const auto combine = [](const ChernVector& a, const ChernVector& b, int sign) {
        // an identically zero side adapts to the other side's dimension
        ChernVector left = a, right = sign < 0 ? scale(-1, b) : b;
        if (left.dim() != right.dim()) {
            if (left.is_zero()) left = ChernVector::zero(right.dim());
            else if (right.is_zero()) right = ChernVector::zero(left.dim());
        }
        return add(left, right);
    };
    switch (e.kind) {
        case ClassExpr::Kind::Int: return ChernVector::point(e.literal);
        case ClassExpr::Kind::Atom: return chern_of(e.atom);
        case ClassExpr::Kind::Add: return combine(evaluate(*e.lhs), evaluate(*e.rhs), +1);
        case ClassExpr::Kind::Sub: return combine(evaluate(*e.lhs), evaluate(*e.rhs), -1);
        case ClassExpr::Kind::Mul: return product(evaluate(*e.lhs), evaluate(*e.rhs));
        case ClassExpr::Kind::Pow: {
            const ChernVector base = evaluate(*e.lhs);
            ChernVector r = base;
            for (int i = 1; i < e.exponent; ++i) r = product(r, base);
            return r;
        }
    }
    throw InternalError("unhandled expression kind");
}

// A pure product of atoms (Mul/Pow over atoms only), e.g. for torus-rank
// queries on a concrete product of varieties.
inline GoodProduct product_from_expr(const ClassExpr& e) {
    std::vector<GoodVariety> factors;
    const std::function<void(const ClassExpr&)> walk = [&](const ClassExpr& node) {
        switch (node.kind) {
            case ClassExpr::Kind::Atom: factors.push_back(node.atom); return;
            case ClassExpr::Kind::Mul:
                walk(*node.lhs);
                walk(*node.rhs);
                return;
            case ClassExpr::Kind::Pow:
                for (int i = 0; i < node.exponent; ++i) walk(*node.lhs);
                return;
            default:
                throw ValidationError(
                    "expected a product of variety atoms (no +, - or integers)");
        }
    };
    walk(e);
    return GoodProduct(std::move(factors));
}

} // namespace cobord
