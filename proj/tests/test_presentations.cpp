#include "doctest.h"
#include "ncalg/presentations.hpp"

using namespace ncalg;

TEST_CASE("built-in presentations") {
    auto r = racah();
    CHECK(r->name() == "racah");
    CHECK(r->alphabet()->size() == 6);
    CHECK(r->system().rules().size() == 15);
    CHECK(bannai_ito()->system().rules().size() == 15);
    CHECK(bi_rebased()->system().rules().size() == 15);
    CHECK(presentation_by_name("bannai-ito") == bannai_ito());
    CHECK(presentation_by_name("rebased") == bi_rebased());
    CHECK(presentation_by_name("nope") == nullptr);
    CHECK(racah() == r);
}

TEST_CASE("defined elements of the Racah algebra") {
    auto r = racah();
    CHECK(r->element("gamma") == r->parse("-alpha - beta"));
    CHECK(r->element("gamma") == r->parse("[C,D] + C*B - A*C"));
    CHECK(r->element("delta") == r->parse("A + B + C"));
    for (const char* central : {"alpha", "beta", "gamma", "delta"}) {
        for (const char* g : {"A", "B", "C", "D"}) {
            CHECK(r->reduce(commutator(r->element(central), r->generator(g))).is_zero());
        }
    }
    CHECK_THROWS(r->element("iota"));
}

TEST_CASE("defined elements of the Bannai-Ito algebra") {
    auto bi = bannai_ito();
    CHECK(bi->parse("{X,Y} - Z") == bi->generator("kappa"));
    CHECK(bi->parse("{Y,Z} - X") == bi->generator("lambda"));
    CHECK(bi->parse("{Z,X} - Y") == bi->generator("mu"));
    CHECK(bi->parse("[X,Y]") == bi->parse("2*X*Y - Z - kappa"));
    CHECK_FALSE(bi->parse("[X,Y]").is_zero());
    CHECK(bi->element("L").to_text() ==
          "2*X^2 + 2*X*lambda - 2*Y^2 - 2*Y*mu + 2*Z^2 + 2*Z*kappa - 4*X*Y*Z");
}

TEST_CASE("rebased presentation relations") {
    auto rb = bi_rebased();
    CHECK(rb->parse("Y*X") == rb->parse("-X*Y - X - Y + iota + kappa"));
    CHECK(rb->parse("iota*Y") == rb->parse("2*Y^2 - Y*iota - Y + iota + kappa + lambda"));
    CHECK(rb->parse("iota*X") == rb->parse("2*X^2 - X*iota - X + iota + kappa + mu"));
    CHECK(rebase_to_iota(bannai_ito()->parse("Z")) == rb->parse("iota - X - Y"));
    CHECK(rebase_from_iota(rb->parse("iota")) == bannai_ito()->parse("X + Y + Z"));
}

TEST_CASE("custom presentation from text") {
    auto p = presentation_from_text("weyl", R"(
alphabet x d
d*x -> x*d + 1
)");
    CHECK(p->id() == PresentationId::Custom);
    CHECK(p->parse("d^2*x").to_text() == "2*d + x*d^2");
    CHECK(p->parse("[d, x^3]") == p->parse("3*x^2"));
    CHECK_THROWS_AS(load_presentation("/nonexistent/system.txt"), std::runtime_error);
}
