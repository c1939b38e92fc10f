#include <random>

#include "doctest.h"
#include "ncalg/presentations.hpp"
#include "support.hpp"

using namespace ncalg;

namespace {

ParseError parse_failure(const Presentation& p, std::string_view input) {
    try {
        p.parse(input);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for " << input);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("grammar basics") {
    auto r = racah();
    CHECK(r->parse("A*B - 2*D").to_text() == "-2*D + A*B");
    CHECK(r->parse("A B") == r->parse("A*B"));
    CHECK(r->parse("(A + B)^2") == r->parse("A^2 + A*B + B*A + B^2"));
    CHECK(r->parse("A^0") == r->parse("1"));
    CHECK(r->parse("-A + B") == r->parse("B - A"));
    CHECK(r->parse("[A, B]") == r->parse("2*D"));
    CHECK(r->parse("{A, B}") == r->parse("A*B + B*A"));
    CHECK(r->parse("1/2*(B*A*C + C*A*B)") == r->parse("1/2*B*A*C + 1/2*C*A*B"));
    CHECK(r->parse("0").is_zero());
}

TEST_CASE("juxtaposed names split into generators") {
    auto r = racah();
    CHECK(r->parse("CBA") == r->parse("C*B*A"));
    CHECK(r->parse("DCA") == r->parse("D*C*A"));
    CHECK(r->parse("Aalpha") == r->parse("A*alpha"));
    auto bi = bannai_ito();
    CHECK(bi->parse("(2X-3)(2X+1)") == bi->parse("(2*X - 3)*(2*X + 1)"));
}

TEST_CASE("unicode spellings and defined names") {
    auto r = racah();
    CHECK(r->parse("α + β + γ").is_zero());
    CHECK(r->parse("δ") == r->parse("A + B + C"));
    CHECK(r->parse("Ω_A") == r->element("Omega_A"));
    auto bi = bannai_ito();
    CHECK(bi->parse("{X,Y} - Z") == bi->parse("κ"));
    CHECK(bi->parse("ι") == bi->parse("X + Y + Z"));
}

TEST_CASE("slash outside a literal is rejected") {
    auto bi = bannai_ito();
    auto e = parse_failure(*bi, "(2X-3)(2X+1)/16");
    CHECK(e.line() == 1);
    CHECK(e.column() == 13);
    CHECK(bi->parse("1/16*(2*X-3)*(2*X+1)") == bi->parse("1/16*(2X-3)(2X+1)"));
}

TEST_CASE("error positions") {
    auto r = racah();
    CHECK(parse_failure(*r, "A + Q").column() == 5);
    CHECK(parse_failure(*r, "[A, B").column() >= 5);
    CHECK(parse_failure(*r, "{A B}").column() >= 1);
    CHECK(parse_failure(*r, "A $ B").column() == 3);
    CHECK(parse_failure(*r, "A^-1").column() >= 3);
    CHECK(parse_failure(*r, "A +").column() >= 3);
    CHECK(parse_failure(*r, "").column() == 1);
    // columns count code points
    CHECK(parse_failure(*r, "α + Q").column() == 5);
    CHECK(parse_failure(*r, "A\n+ Q").line() == 2);
}

TEST_CASE("ast rendering") {
    auto r = racah();
    auto ast = parse_expression("A*B - 2*D", r->scope());
    CHECK(ast.kind == ExpressionAst::Kind::Difference);
    CHECK(ast_to_text(ast) == "((A * B) - (2 * D))");
    auto br = parse_expression("[A, B^2]", r->scope());
    CHECK(br.kind == ExpressionAst::Kind::Commutator);
    CHECK(br.children.at(1).kind == ExpressionAst::Kind::Power);
    CHECK(br.children.at(1).exponent == 2);
}

TEST_CASE("parse of print of parse is stable") {
    std::mt19937 rng(77);
    for (const auto& p : {racah(), bannai_ito(), bi_rebased()}) {
        for (int t = 0; t < 100; ++t) {
            Element e = p->reduce(testing::random_element(rng, *p, 5, 4));
            const std::string text = e.to_text();
            Element again = p->parse(text);
            CHECK(again == e);
            CHECK(again.to_text() == text);
        }
    }
}
