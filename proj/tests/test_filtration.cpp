#include <random>

#include "doctest.h"
#include "ncalg/filtration.hpp"
#include "ncalg/presentations.hpp"

using namespace ncalg;

TEST_CASE("weight vector parsing") {
    auto w = WeightVector::parse("4,4,6,8,9,9");
    CHECK(w.size() == 6);
    CHECK(w[2] == 6);
    CHECK(w.of(Word{0, 2, 3}) == 18);
    CHECK_THROWS_AS(WeightVector::parse("1,-1"), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(is_filtration(WeightVector::parse("1,1,1")), std::invalid_argument);
}

TEST_CASE("filtration criterion examples") {
    CHECK(is_filtration(WeightVector::parse("4,4,6,8,9,9")));
    CHECK(is_filtration(WeightVector::parse("1,1,2,0,0,0")));
    CHECK(is_filtration(WeightVector::parse("0,0,0,0,0,0")));
    CHECK_FALSE(is_filtration(WeightVector::parse("1,1,3,0,0,0")));
    CHECK_FALSE(is_filtration(WeightVector::parse("1,1,1,3,0,0")));
    CHECK_FALSE(is_filtration(WeightVector::parse("4,1,1,0,0,0")));
}

TEST_CASE("criterion agrees with a brute-force product oracle") {
    // oracle: products of pairs of short ordered monomials, reduced, never
    // exceed the summed weight exactly when the vector is a filtration
    auto bi = bannai_ito();
    std::mt19937 rng(17);
    std::uniform_int_distribution<unsigned> entry(0, 3);
    const auto alphabet = bi->alphabet();
    std::vector<Word> short_words;
    for (Symbol a = 0; a < 6; ++a) {
        short_words.push_back(Word{a});
        for (Symbol b = a; b < 6; ++b) short_words.push_back(Word{a, b});
    }
    for (int t = 0; t < 60; ++t) {
        std::vector<unsigned> v(6);
        for (auto& x : v) x = entry(rng);
        WeightVector w(v);
        bool respects = true;
        for (const auto& u : short_words) {
            for (const auto& x : short_words) {
                Element prod = bi->reduce(Element::monomial(alphabet, u * x));
                for (const auto& [word, c] : prod.terms()) respects = respects && w.of(word) <= w.of(u) + w.of(x);
            }
        }
        CHECK(respects == is_filtration(w));
        CHECK(rules_respect_weights(bi->system(), w) == is_filtration(w));
        CHECK(check_filtration_product(bi->system(), w, 6, 3).holds == is_filtration(w));
    }
}

TEST_CASE("product check reports a witness") {
    auto bi = bannai_ito();
    auto check = check_filtration_product(bi->system(), WeightVector::parse("1,1,3,0,0,0"), 4, 2);
    REQUIRE_FALSE(check.holds);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->degree > check.witness->bound);
    CHECK(check.pairs_checked > 0);
}

TEST_CASE("weighted degree and leading forms") {
    auto bi = bannai_ito();
    auto w = WeightVector::parse("4,4,6,8,9,9");
    Element e = bi->parse("Z + kappa");
    CHECK(weighted_degree(bi->system(), w, e) == 8);
    CHECK(leading_form(w, e, 8) == bi->parse("kappa"));
    CHECK(leading_form(w, e, 0) == e);
    CHECK(leading_form(w, e, 9).is_zero());
    CHECK(weighted_degree(w, Element(bi->alphabet())) == -1);
    CHECK_THROWS_AS(weighted_degree(bi->system(), w, bi->parse("X") * bi->parse("Y") * bi->parse("X")),
                    NotIrreducible);
}

TEST_CASE("ordered monomial enumeration") {
    auto w = WeightVector::parse("1,1,2,0,0,0");
    auto words = ordered_monomials(6, w, 2, 2);
    for (const auto& m : words) {
        CHECK(is_ordered_monomial(m));
        CHECK(w.of(m) <= 2);
        CHECK(m.size() <= 2);
    }
    // 1 + 6 singles + 21 ordered pairs, minus pairs with weight > 2 (none: max is Z*Z = 4)
    std::size_t heavy = 0;
    for (Symbol a = 0; a < 6; ++a) {
        for (Symbol b = a; b < 6; ++b) heavy += w.of(Word{a, b}) > 2 ? 1 : 0;
    }
    CHECK(words.size() == 1 + 6 + 21 - heavy);
}
