#include <numeric>
#include <random>

#include "doctest.h"
#include "ncalg/element.hpp"
#include "support.hpp"

using namespace ncalg;

TEST_CASE("scalar arithmetic is exact") {
    CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(3, -6).to_string() == "-1/2");
    CHECK(Scalar(4).to_string() == "4");
    CHECK(Scalar(-2, 3).pow(3) == Scalar(-8, 27));
    CHECK(Scalar(4).pow(-2) == Scalar(1, 16));
    CHECK(Scalar(0).is_zero());
    CHECK(Scalar(7, 7).is_one());
    CHECK(Scalar(-1, 9) < Scalar(0));
}

TEST_CASE("scalar parse and errors") {
    CHECK(Scalar::parse("1/16") == Scalar(1, 16));
    CHECK(Scalar::parse("-9/16") == Scalar(-9, 16));
    CHECK(Scalar::parse("12") == Scalar(12));
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
    CHECK_THROWS(Scalar::parse("x"));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
}

TEST_CASE("scalar results agree with long long fractions") {
    // oracle: reduced p/q with 64-bit integers, small operands only
    auto reduce = [](long long p, long long q) {
        if (q < 0) p = -p, q = -q;
        long long g = std::gcd(p < 0 ? -p : p, q);
        return std::pair{p / g, q / g};
    };
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    for (int t = 0; t < 500; ++t) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        auto [sp, sq] = reduce(a * d + c * b, b * d);
        auto [pp, pq] = reduce(a * c, b * d);
        CHECK(Scalar(a, b) + Scalar(c, d) == Scalar(sp, sq));
        CHECK(Scalar(a, b) * Scalar(c, d) == Scalar(pp, pq));
    }
}

TEST_CASE("alphabet lookup") {
    auto a = Alphabet::make({"X", "Y", "kappa=κ"});
    CHECK(a->size() == 3);
    CHECK(a->at("kappa") == 2);
    CHECK(a->at("κ") == 2);
    CHECK_FALSE(a->find("Z").has_value());
    CHECK_THROWS(a->at("Z"));
    CHECK_THROWS(Alphabet::make({"X", "X"}));
}

TEST_CASE("words and graded-lex order") {
    Word ab{0, 1}, ba{1, 0}, a{0};
    GradedLex less;
    CHECK(less(a, ab));
    CHECK(less(ab, ba));
    CHECK_FALSE(less(ba, ab));
    CHECK((ab * ba) == Word{0, 1, 1, 0});
    CHECK((ab * ba).find(Word{1, 1}) == 1);
    CHECK(Word{0, 1, 2}.splice(1, 1, Word{2, 2}) == Word{0, 2, 2, 2});
    CHECK(Word{0, 1, 2}.reversed() == Word{2, 1, 0});
    CHECK(Word{0, 0, 1}.count(0) == 2);
    CHECK(is_ordered_monomial(Word{0, 0, 2}));
    CHECK_FALSE(is_ordered_monomial(Word{1, 0}));
    auto alphabet = Alphabet::make({"X", "Y", "kappa"});
    CHECK(word_to_text(*alphabet, Word{0, 0, 1, 2, 2, 2}) == "X^2*Y*kappa^3");
    CHECK(word_to_text(*alphabet, Word{}) == "1");
}

TEST_CASE("element canonical text and zero handling") {
    auto a = Alphabet::make({"X", "Y", "Z", "kappa"});
    Element x = Element::generator(a, 0), y = Element::generator(a, 1), z = Element::generator(a, 2),
            k = Element::generator(a, 3);
    Element e = Scalar(1, 16) * (z * k) - Scalar(1, 8) * (x * y * z);
    CHECK(e.to_text() == "1/16*Z*kappa - 1/8*X*Y*Z");
    CHECK((e - e).is_zero());
    CHECK((e - e).to_text() == "0");
    CHECK((e - e).degree() == -1);
    CHECK(e.degree() == 3);
    CHECK(Element(a, Scalar(-3, 2)).to_text() == "-3/2");
    CHECK(e.coefficient(Word{2, 3}) == Scalar(1, 16));
    CHECK(e.coefficient(Word{0}) == Scalar(0));
}

TEST_CASE("constants combine with any alphabet, alphabets do not mix") {
    auto a = Alphabet::make({"X"});
    auto b = Alphabet::make({"A"});
    Element x = Element::generator(a, 0);
    CHECK((x + Element::constant(Scalar(2))).to_text() == "2 + X");
    CHECK_THROWS_AS(x + Element::generator(b, 0), AlphabetMismatch);
    CHECK_THROWS_AS(x * Element::generator(b, 0), AlphabetMismatch);
}

TEST_CASE("free algebra ring axioms on random elements") {
    auto p = ncalg::presentation_by_name("bi");
    std::mt19937 rng(2024);
    for (int t = 0; t < 100; ++t) {
        Element a = testing::random_element(rng, *p), b = testing::random_element(rng, *p),
                c = testing::random_element(rng, *p);
        CHECK((a + b) == (b + a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a + b) * c) == (a * c + b * c));
        CHECK((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK(commutator(a, b) == -commutator(b, a));
        CHECK(anticommutator(a, b) == anticommutator(b, a));
    }
}

TEST_CASE("element json round trip") {
    auto p = ncalg::presentation_by_name("racah");
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Element a = testing::random_element(rng, *p);
        auto j = element_to_json(a);
        CHECK(element_from_json(p->alphabet(), j) == a);
    }
    Element x = Element::monomial(p->alphabet(), Word{0, 1}, Scalar(-1, 2));
    CHECK(element_to_json(x).dump() == R"([{"coeff":"-1/2","word":["A","B"]}])");
    CHECK_THROWS(element_from_json(p->alphabet(), nlohmann::json::parse(R"([{"coeff":"1","word":["Q"]}])")));
}
