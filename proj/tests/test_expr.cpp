#include <catch2/catch.hpp>

#include "cobord/expr.hpp"

using namespace cobord;

TEST_CASE("basic grammar") {
    const auto e = parse_class_expr("2*CP(2) - CP(1)^2");
    REQUIRE(e->kind == ClassExpr::Kind::Sub);
    CHECK(e->lhs->kind == ClassExpr::Kind::Mul);
    CHECK(e->rhs->kind == ClassExpr::Kind::Pow);

    const auto atom = parse_class_expr("H(2,2)");
    REQUIRE(atom->kind == ClassExpr::Kind::Atom);
    CHECK(to_string(atom->atom) == "H(2,2)");

    const auto paren = parse_class_expr("(CP(1) + Sigma(2)) * CP(2)");
    CHECK(paren->kind == ClassExpr::Kind::Mul);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(*parse_class_expr("CP(2)")) == cp_chern(2));
    CHECK(evaluate(*parse_class_expr("2*CP(2)")) == scale(2, cp_chern(2)));
    CHECK(evaluate(*parse_class_expr("CP(1)^2")) == product(cp_chern(1), cp_chern(1)));
    CHECK(evaluate(*parse_class_expr("CP(1)*CP(1)*CP(1)")) ==
          product(cp_chern(1), product(cp_chern(1), cp_chern(1))));
    CHECK(evaluate(*parse_class_expr("7")) == ChernVector::point(7));
    CHECK(evaluate(*parse_class_expr("2*CP(2) - CP(1)^2")) ==
          subtract(scale(2, cp_chern(2)), product(cp_chern(1), cp_chern(1))));

    // the zero class adapts its dimension
    CHECK(evaluate(*parse_class_expr("0 - CP(2)")) == scale(-1, cp_chern(2)));
    CHECK(evaluate(*parse_class_expr("CP(2) - CP(2) + CP(2)")) == cp_chern(2));

    // mismatched nonzero dimensions fail at evaluation, not parse
    const auto bad = parse_class_expr("CP(2) + CP(1)");
    CHECK_THROWS_AS(evaluate(*bad), DimensionMismatchError);
}

TEST_CASE("precedence") {
    // '*' binds tighter than '+', '^' tighter than '*'
    CHECK(evaluate(*parse_class_expr("CP(1)*CP(1) + CP(2)")) ==
          add(product(cp_chern(1), cp_chern(1)), cp_chern(2)));
    CHECK(evaluate(*parse_class_expr("2*CP(1)^2")) ==
          scale(2, product(cp_chern(1), cp_chern(1))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_class_expr("CP("), ParseError);
    CHECK_THROWS_AS(parse_class_expr("H(2,2"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("XX(2)"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("CP(2) +"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("CP(2))"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("CP(1)^0"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("Sigma(1)"), ParseError); // genus must exceed 1
    CHECK_THROWS_AS(parse_class_expr("CP(0)"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("BlCP(2,5)"), ParseError);
    try {
        parse_class_expr("CP(2) @ CP(1)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
    }
}

TEST_CASE("pretty printing reparses to an identical tree") {
    const std::vector<std::string> corpus = {
        "CP(1)",
        "CP(12)",
        "H(2,2)",
        "H(4,5)",
        "Sigma(2)",
        "Sigma(17)",
        "BlCP(2,3)",
        "BlCP(7,1)",
        "0",
        "42",
        "2*CP(2)",
        "2 * CP(2) - CP(1)^2",
        "CP(1)^2",
        "CP(1)^2^3",
        "(CP(1) + Sigma(2))^3",
        "CP(2) + CP(2) + CP(2)",
        "CP(2) - CP(2) - CP(2)",
        "CP(2) - (CP(2) - CP(2))",
        "CP(1) * CP(1) * CP(1)",
        "CP(1) * (CP(1) + CP(1))",
        "(CP(1) + CP(1)) * CP(1)",
        "3 * H(2,4) + CP(5)",
        "2*BlCP(3,2) - CP(3) - CP(3)",
        "H(2,2) * CP(1) - CP(2) * CP(2)",
        "(H(2,2) + BlCP(3,1)) * Sigma(2)",
        "10*CP(4)",
        "CP(4) - 0",
        "1 * CP(1)",
        "Sigma(2) * Sigma(3) * Sigma(4)",
        "((CP(1)))",
        "CP(1)^3 * CP(2)^2",
        "7 + 7 - 7",
    };
    for (const auto& text : corpus) {
        const auto first = parse_class_expr(text);
        const auto printed = pretty_print(*first);
        const auto second = parse_class_expr(printed);
        INFO(text << " -> " << printed);
        CHECK(expr_equal(*first, *second));
        CHECK(pretty_print(*second) == printed);
    }
}

TEST_CASE("products of atoms extract to good products") {
    const auto p = product_from_expr(*parse_class_expr("H(4,5) * Sigma(2)"));
    CHECK(torus_rank(p) == 4);
    CHECK(dimension(p) == 9);

    const auto square = product_from_expr(*parse_class_expr("CP(1)^2"));
    CHECK(torus_rank(square) == 2);

    CHECK_THROWS_AS(product_from_expr(*parse_class_expr("CP(1) + CP(1)")), ValidationError);
    CHECK_THROWS_AS(product_from_expr(*parse_class_expr("2*CP(1)")), ValidationError);
}
