#include <random>

#include "doctest.h"
#include "ncalg/presentations.hpp"
#include "ncalg/system_text.hpp"
#include "support.hpp"

using namespace ncalg;

namespace {

/// Reduces by firing a random rule at a random occurrence until nothing
/// applies; by confluence the result must equal normal_form.
Element random_path_reduce(const ReductionSystem& sys, Element e, std::mt19937& rng) {
    for (int guard = 0; guard < 100000; ++guard) {
        std::vector<std::tuple<Word, std::size_t, std::size_t>> redexes;
        for (const auto& [w, c] : e.terms()) {
            for (std::size_t r = 0; r < sys.rules().size(); ++r) {
                const Word& lhs = sys.rules()[r].lhs;
                for (auto pos = w.find(lhs); pos != Word::npos; pos = w.find(lhs, pos + 1)) {
                    redexes.emplace_back(w, r, pos);
                }
            }
        }
        if (redexes.empty()) return e;
        auto [w, r, pos] = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        const Scalar c = e.coefficient(w);
        const Rule& rule = sys.rules()[r];
        e.add_term(w, -c);
        Element prefix = Element::monomial(sys.alphabet(), w.subword(0, pos));
        Element suffix = Element::monomial(sys.alphabet(), w.subword(pos + rule.lhs.size()));
        e += c * (prefix * rule.rhs * suffix);
    }
    FAIL("random reduction did not stop");
    return e;
}

}  // namespace

TEST_CASE("racah overlap words reduce to the displayed completions") {
    auto r = racah();
    const auto& sys = r->system();
    CHECK(normal_form(sys, r->parse("C*B*A")).to_text() ==
          "-2*beta + 2*A*B - 2*A*D - 2*B*C + 2*B*D - 2*C*D + A*B*C");
    CHECK(normal_form(sys, r->parse("D*B*A")) ==
          r->parse("A*B*D - 2*D^2 + A^2*B - A*B^2 - 2*A*D + 2*B*D + 2*A*B - 2*B*C - A*beta - B*alpha - 2*beta"));
}

TEST_CASE("confluence reports") {
    auto r = racah();
    auto reports = check_confluence(r->system());
    CHECK(reports.size() == 20);
    CHECK(all_resolvable(reports));
    std::vector<std::string> nontrivial;
    for (const auto& rep : reports) {
        if (!rep.trivial) nontrivial.push_back(word_to_text(*r->alphabet(), rep.word));
    }
    CHECK(nontrivial.size() == 4);

    auto bi = bannai_ito();
    auto bi_reports = check_confluence(bi->system());
    CHECK(all_resolvable(bi_reports));
    std::vector<std::string> bi_nontrivial;
    for (const auto& rep : bi_reports) {
        if (!rep.trivial) bi_nontrivial.push_back(word_to_text(*bi->alphabet(), rep.word));
    }
    CHECK(bi_nontrivial == std::vector<std::string>{"Z*Y*X"});
}

TEST_CASE("an unresolvable overlap is reported") {
    auto sys = parse_system(R"(
alphabet A B C
B*A -> A
C*B -> B
)");
    auto reports = check_confluence(sys);
    REQUIRE(reports.size() == 1);
    CHECK(word_to_text(*sys.alphabet(), reports[0].word) == "C*B*A");
    CHECK_FALSE(reports[0].resolvable);
    CHECK_FALSE(all_resolvable(reports));
}

TEST_CASE("inclusion ambiguities are found") {
    auto sys = parse_system(R"(
alphabet A B C
A*B*C -> C
B*C -> A
)");
    auto reports = check_confluence(sys);
    bool inclusion = false;
    for (const auto& rep : reports) inclusion = inclusion || rep.inclusion;
    CHECK(inclusion);
}

TEST_CASE("normal form is unique along random reduction paths") {
    std::mt19937 rng(314);
    for (const auto& p : {racah(), bannai_ito(), bi_rebased()}) {
        for (int t = 0; t < 40; ++t) {
            Element e = testing::random_element(rng, *p, 3, 4);
            CHECK(random_path_reduce(p->system(), e, rng) == normal_form(p->system(), e));
        }
    }
}

TEST_CASE("normal form is idempotent and multiplicative") {
    std::mt19937 rng(99);
    for (const auto& p : {racah(), bannai_ito()}) {
        const auto& sys = p->system();
        for (int t = 0; t < 50; ++t) {
            Element a = testing::random_element(rng, *p), b = testing::random_element(rng, *p);
            Element na = normal_form(sys, a), nb = normal_form(sys, b);
            CHECK(normal_form(sys, na) == na);
            CHECK(is_normal(sys, na));
            CHECK(normal_form(sys, a * b) == normal_form(sys, na * nb));
            CHECK(normal_form(sys, a + b) == na + nb);
        }
    }
}

TEST_CASE("termination certificates") {
    for (const auto& p : {racah(), bannai_ito(), bi_rebased()}) {
        CHECK(p->system().termination().terminates);
    }
    // a weighted order with D heavier also certifies the Racah rules
    auto r = racah();
    std::vector<Rule> rules = r->system().rules();
    ReductionSystem weighted(r->alphabet(), rules, TermOrder({1, 1, 1, 2, 1, 1}));
    CHECK(weighted.termination().terminates);
    // plain length order without the descent chain does not
    ReductionSystem flat(r->alphabet(), rules, TermOrder::length_order(6));
    CHECK_FALSE(flat.termination().terminates);
    CHECK_THROWS_AS(normal_form(flat, r->parse("D*A")), std::logic_error);
}

TEST_CASE("term order") {
    TermOrder len = TermOrder::length_order(3);
    CHECK(len.less(Word{0}, Word{1, 0}));
    CHECK(len.less(Word{0, 1}, Word{1, 0}));
    CHECK_FALSE(len.less(Word{1, 0}, Word{0, 1}));
    TermOrder chain({1, 1, 1}, {0, 1, 2});
    CHECK(chain.less(Word{0, 0}, Word{0, 2}));
    TermOrder weighted({1, 1, 2});
    CHECK(weighted.less(Word{0, 1}, Word{2, 0}));
    CHECK(weighted.less(Word{0, 1, 1}, Word{2, 2}));
    CHECK(weighted.less(Word{2, 0}, Word{0, 1, 1}));
}

TEST_CASE("reduction system validation") {
    auto a = Alphabet::make({"A", "B"});
    auto A = Element::generator(a, 0), B = Element::generator(a, 1);
    CHECK_THROWS_AS(ReductionSystem(a, {Rule{Word{0}, B}}, TermOrder::length_order(2)), std::invalid_argument);
    CHECK_THROWS_AS(ReductionSystem(a, {Rule{Word{1, 0}, A * B}, Rule{Word{1, 0}, A}}, TermOrder::length_order(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReductionSystem(a, {Rule{Word{1, 0}, B * A}}, TermOrder::length_order(2)), std::invalid_argument);
    CHECK_THROWS_AS(ReductionSystem(a, {Rule{Word{1, 0}, Element::generator(Alphabet::make({"Q"}), 0)}},
                                    TermOrder::length_order(2)),
                    std::exception);
    auto other = racah();
    CHECK_THROWS_AS(normal_form(bannai_ito()->system(), other->parse("A")), AlphabetMismatch);
}

TEST_CASE("system text round trip and errors") {
    auto r = racah();
    std::string text = system_to_text(r->system());
    auto again = parse_system(text);
    CHECK(again.rules().size() == r->system().rules().size());
    CHECK(system_to_text(again) == text);
    CHECK(again.order().descent_chain() == r->system().order().descent_chain());

    auto line_of = [](std::string_view t) {
        try {
            parse_system(t);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("B*A -> A") == 1);
    CHECK(line_of("alphabet A B\nB*A -> Q") == 2);
    CHECK(line_of("alphabet A B\n\nB*A A") == 3);
    CHECK(line_of("alphabet A B\nweights 1") == 2);
    CHECK(line_of("alphabet A B\nchain A Q") == 2);
}

TEST_CASE("irreducible words are the ordered monomials") {
    for (const auto& p : {racah(), bannai_ito(), bi_rebased()}) {
        auto words = irreducible_words(p->system(), 4);
        CHECK(words.size() == 210);  // C(6 + 4, 4)
        for (const auto& w : words) CHECK(is_ordered_monomial(w));
    }
}

TEST_CASE("substitution respects products") {
    auto bi = bannai_ito();
    auto rb = bi_rebased();
    std::mt19937 rng(8);
    for (int t = 0; t < 100; ++t) {
        Element e = bi->reduce(testing::random_element(rng, *bi, 4, 3));
        Element there = rebase_to_iota(e);
        CHECK(is_normal(rb->system(), there));
        CHECK(rebase_from_iota(there) == e);
    }
}
