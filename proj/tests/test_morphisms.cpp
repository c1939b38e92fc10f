#include <array>
#include <random>

#include "doctest.h"
#include "ncalg/morphisms.hpp"
#include "support.hpp"

using namespace ncalg;

namespace {

/// D6 as symmetries of a hexagon: permutations of the six vertices.
using Perm = std::array<int, 6>;
Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm r{};
    for (int i = 0; i < 6; ++i) r[i] = a[b[i]];
    return r;
}
const Perm kRotation{1, 2, 3, 4, 5, 0};
const Perm kReflection{0, 5, 4, 3, 2, 1};

Perm as_perm(const D6Element& g) {
    Perm r{0, 1, 2, 3, 4, 5};
    for (int i = 0; i < g.rotation(); ++i) r = compose(kRotation, r);
    return g.reflection() ? compose(r, kReflection) : r;
}

}  // namespace

TEST_CASE("zeta images of the generators") {
    const auto& z = zeta();
    CHECK(z.sealed());
    auto bi = bannai_ito();
    CHECK(z.image("A") == bi->parse("1/16*(2*X - 3)*(2*X + 1)"));
    CHECK(z.apply(std::string_view("gamma")) == bi->parse("1/64*(2*iota - mu - lambda - 3)*(mu - lambda)"));
    CHECK(z.apply(std::string_view("delta")) == bi->parse("1/4*(iota^2 - 2*iota - kappa - lambda - mu) - 9/16"));
    CHECK(z.apply(std::string_view("D")) == bi->parse("1/32*([X,Y] + [Y,Z] + [Z,X] + L)"));
    CHECK(z.verify_on_relations().holds);
}

TEST_CASE("unsealed maps cannot be applied") {
    auto r = racah();
    auto bi = bannai_ito();
    std::vector<Element> images;
    for (const char* g : {"X", "Y", "Z", "0", "kappa", "mu"}) images.push_back(bi->parse(g));
    AlgebraMap bad("bad", r, bi, images, MapKind::Homomorphism);
    CHECK_FALSE(bad.sealed());
    CHECK_THROWS_AS(bad.apply(r->parse("A")), UnsealedMap);
    RelationCheck check = bad.seal();
    CHECK_FALSE(check.holds);
    CHECK_FALSE(bad.sealed());
    CHECK_FALSE(check.counterexamples.empty());
    CHECK_FALSE(check.counterexamples.front().defect.is_zero());
    CHECK_THROWS_AS(make_sealed_map("bad", r, bi, {"X", "Y", "Z", "0", "kappa", "mu"}, MapKind::Homomorphism),
                    std::invalid_argument);
    CHECK_THROWS_AS(AlgebraMap("short", r, bi, {bi->parse("X")}, MapKind::Homomorphism), std::invalid_argument);
}

TEST_CASE("maps are linear, anti-maps reverse products") {
    std::mt19937 rng(41);
    auto r = racah();
    auto bi = bannai_ito();
    for (int t = 0; t < 30; ++t) {
        Element a = testing::random_element(rng, *r, 3, 3), b = testing::random_element(rng, *r, 3, 3);
        const auto& z = zeta();
        CHECK(z.apply(a + b) == z.apply(a) + z.apply(b));
        CHECK(z.apply(Scalar(3, 7) * a) == Scalar(3, 7) * z.apply(a));
        CHECK(z.apply(a * b) == bi->reduce(z.apply(a) * z.apply(b)));
        const auto& s = sigma_on("racah");
        CHECK(s.apply(a * b) == r->reduce(s.apply(b) * s.apply(a)));
        Element x = testing::random_element(rng, *bi, 3, 3), y = testing::random_element(rng, *bi, 3, 3);
        const auto& tb = tau_on("bi");
        CHECK(tb.apply(x * y) == bi->reduce(tb.apply(y) * tb.apply(x)));
    }
}

TEST_CASE("D6 tables") {
    auto r = racah();
    CHECK(sigma_on("racah").apply(std::string_view("gamma")) == r->parse("-gamma"));
    CHECK(sigma_on("racah").apply(std::string_view("delta")) == r->parse("delta"));
    CHECK(tau_on("racah").apply(std::string_view("gamma")) == r->parse("alpha"));
    auto bi = bannai_ito();
    CHECK(sigma_on("bi").apply(std::string_view("iota")) == bi->parse("iota"));
    CHECK(tau_on("bi").apply(std::string_view("lambda")) == bi->parse("mu"));
    CHECK_THROWS_AS(sigma_on("rebased"), std::invalid_argument);
}

TEST_CASE("composition") {
    const auto& s = sigma_on("racah");
    const auto& t = tau_on("racah");
    AlgebraMap st = compose(s, t);
    CHECK(st.kind() == MapKind::Homomorphism);
    CHECK(same_action(compose(st, st), identity_map(racah())));
    CHECK_THROWS_AS(compose(s, zeta()), std::invalid_argument);
    AlgebraMap zs = compose(zeta(), s);
    CHECK(zs.kind() == MapKind::Antihomomorphism);
    CHECK(zs.apply(std::string_view("A")) == zeta().apply(std::string_view("B")));
}

TEST_CASE("D6 group arithmetic matches hexagon permutations") {
    std::vector<D6Element> all;
    for (int k = 0; k < 6; ++k) {
        D6Element rot;
        for (int i = 0; i < k; ++i) rot = rot * D6Element::tau();
        all.push_back(rot);
        all.push_back(rot * D6Element::sigma());
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i != j) CHECK_FALSE(all[i] == all[j]);
        }
    }
    CHECK(as_perm(D6Element::sigma() * D6Element::tau()) == compose(kReflection, kRotation));
    for (const auto& a : all) {
        for (const auto& b : all) CHECK(as_perm(a * b) == compose(as_perm(a), as_perm(b)));
    }
    CHECK(D6Element::parse("sigma tau sigma tau").is_identity());
    CHECK(D6Element::parse("t t t t t t").is_identity());
    CHECK(D6Element::parse("1").is_identity());
    CHECK_THROWS(D6Element::parse("rho"));
}

TEST_CASE("D6 relations and equivariance") {
    for (const char* alg : {"racah", "bi"}) CHECK(check_d6_relations(sigma_on(alg), tau_on(alg)).holds());
    for (const char* word : {"sigma", "tau", "tau tau", "sigma tau tau tau", "tau sigma"}) {
        CHECK(check_equivariance(zeta(), D6Element::parse(word)));
    }
}
