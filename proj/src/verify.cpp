#include "ncalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "ncalg/casimir.hpp"
#include "ncalg/filtration.hpp"

namespace ncalg {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

const std::set<std::string, std::less<>> kKinds{"racah",        "bi",          "rebased",   "zeta",
                                               "zeta-rebased", "sigma-racah", "tau-racah", "sigma-bi",
                                               "tau-bi"};

/// Collects failure notes for one criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    void equal(const Element& got, const Element& want, const std::string& what) {
        ++checks_;
        if (!(got == want)) failures_.push_back(what + ": got " + got.to_text() + ", expected " + want.to_text());
    }
    void note(const std::string& s) { notes_.push_back(s); }

    bool ok() const { return failures_.empty(); }
    std::string detail() const {
        std::string out = std::to_string(checks_) + " checks";
        for (const auto& n : notes_) out += "; " + n;
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += "; FAILED " + failures_[i];
        if (failures_.size() > 5) out += "; ... " + std::to_string(failures_.size() - 5) + " more failures";
        return out;
    }

private:
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

const Identity& corpus_entry(std::string_view label) {
    static const std::vector<Identity> corpus = builtin_identities();
    for (const auto& id : corpus) {
        if (id.label == label) return id;
    }
    throw std::out_of_range("identity corpus has no entry '" + std::string(label) + "'");
}

Element power(const Presentation& p, const Element& e, unsigned n) {
    Element r(p.alphabet(), Scalar(1));
    for (unsigned i = 0; i < n; ++i) r = p.reduce(r * e);
    return r;
}

Word word_of(const Presentation& p, std::initializer_list<std::pair<const char*, unsigned>> runs) {
    std::string s;
    for (const auto& [name, n] : runs) s.append(n, static_cast<char>(p.alphabet()->at(name)));
    return Word(s);
}

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void criterion_1(Checker& c) {
    const auto& r = *racah();
    auto reports = check_confluence(r.system());
    c.expect(all_resolvable(reports), "some Racah ambiguity does not resolve");
    std::set<std::string> nontrivial;
    for (const auto& rep : reports) {
        if (!rep.trivial) nontrivial.insert(word_to_text(*r.alphabet(), rep.word));
    }
    c.note(std::to_string(reports.size()) + " ambiguities, " + std::to_string(nontrivial.size()) + " nontrivial");
    c.expect(nontrivial == std::set<std::string>{"C*B*A", "D*B*A", "D*C*B", "D*C*A"},
             "nontrivial overlaps differ from CBA, DBA, DCB, DCA");
    for (const auto& rep : reports) {
        if (rep.trivial) continue;
        std::string word = word_to_text(*r.alphabet(), rep.word);
        std::string label = "racah overlap ";
        for (char ch : word) {
            if (ch != '*') label += ch;
        }
        Element expected = r.parse(corpus_entry(label).rhs);
        c.equal(rep.left_result, expected, word + " first reduction path");
        c.equal(rep.right_result, expected, word + " second reduction path");
    }
}

void scan_ordered(Checker& c, const Presentation& p, std::size_t len) {
    auto words = irreducible_words(p.system(), len);
    std::size_t ordered = 0;
    for (const auto& w : words) ordered += is_ordered_monomial(w) ? 1 : 0;
    // nondecreasing words of length <= len over n letters: C(n + len, len)
    const auto expected = static_cast<std::size_t>(binomial(static_cast<long>(p.alphabet()->size() + len), len));
    c.expect(ordered == words.size() && words.size() == expected,
             p.name() + " irreducible words up to length " + std::to_string(len) + " are not the ordered monomials");
    c.note(p.name() + ": " + std::to_string(words.size()) + " irreducible words up to length " + std::to_string(len));
}

void criterion_2(Checker& c) {
    for (const auto& p : {bannai_ito(), bi_rebased()}) {
        auto reports = check_confluence(p->system());
        c.expect(all_resolvable(reports), p->name() + " has an unresolvable ambiguity");
        c.note(p->name() + ": " + std::to_string(reports.size()) + " ambiguities resolvable");
    }
    for (const auto& p : {racah(), bannai_ito(), bi_rebased()}) scan_ordered(c, *p, 6);
}

void criterion_3(Checker& c) {
    const auto& z = zeta();
    auto check = z.verify_on_relations();
    c.expect(check.holds, "zeta breaks " + std::to_string(check.counterexamples.size()) + " Racah relations");
    c.note("zeta respects all " + std::to_string(racah()->system().rules().size()) + " Racah rules");
    c.expect(z.apply(std::string_view("alpha + beta + gamma")).is_zero(), "zeta(alpha + beta + gamma) != 0");
    const auto& rb = *bi_rebased();
    c.equal(rebase_to_iota(z.apply(std::string_view("delta"))),
            rb.parse("1/4*(iota^2 - 2*iota - kappa - lambda - mu) - 9/16"), "rebased zeta(delta)");
    for (const char* label : {"zeta A", "zeta B", "zeta C", "zeta alpha", "zeta beta", "zeta gamma"}) {
        const auto& id = corpus_entry(label);
        c.equal(z.apply(std::string_view(id.lhs)), bannai_ito()->parse(id.rhs), label);
    }
}

void criterion_4(Checker& c) {
    const auto& bi = *bannai_ito();
    const Element zd = zeta().apply(std::string_view("D"));
    c.equal(zd, bi.parse("1/32*([X,Y] + [Y,Z] + [Z,X] + L)"), "zeta(D)");
    const auto w = WeightVector::parse("4,4,6,8,9,9");
    c.expect(weighted_degree(w, zd) == 14, "zeta(D) is not of weighted degree 14");
    c.equal(leading_form(w, zd, 14), bi.parse("1/16*Z*kappa - 1/8*X*Y*Z"), "leading form of zeta(D)");
    const Element zd2 = bi.reduce(zd * zd);
    c.expect(weighted_degree(w, zd2) == 28, "zeta(D)^2 is not of weighted degree 28");
    c.equal(leading_form(w, zd2, 28), bi.parse("1/256*Z^2*kappa^2 - 1/64*X^2*Y^2*Z^2"), "leading form of zeta(D)^2");
}

void criterion_5(Checker& c) {
    const auto& bi = *bannai_ito();
    const std::pair<const char*, const char*> part_i[] = {
        {"[X^2, Y]", "[X, Z]"}, {"[Y^2, Z]", "[Y, X]"}, {"[Z^2, X]", "[Z, Y]"},
        {"[Y^2, X]", "[Y, Z]"}, {"[Z^2, Y]", "[Z, X]"}, {"[X^2, Z]", "[X, Y]"},
    };
    for (const auto& [l, r] : part_i) c.equal(bi.parse(l), bi.parse(r), std::string(l) + " = " + r);
    const char* part_ii[] = {"{X, [Z,Y]}", "{Y, [X,Z]}", "{Z, [Y,X]}", "[X^2, Y^2]", "[Y^2, Z^2]", "[Z^2, X^2]"};
    const Element first = bi.parse(part_ii[0]);
    c.expect(!first.is_zero(), "L is zero");
    for (const char* e : part_ii) c.equal(bi.parse(e), first, std::string(e) + " = {X, [Z,Y]}");
}

void criterion_6(Checker& c) {
    const auto& bi = *bannai_ito();
    std::size_t filtrations = 0, vectors = 0;
    std::vector<unsigned> v(6, 0);
    std::function<void(std::size_t)> sweep = [&](std::size_t slot) {
        if (slot == 6) {
            WeightVector w(v);
            bool f = is_filtration(w);
            filtrations += f ? 1 : 0;
            ++vectors;
            c.expect(f == rules_respect_weights(bi.system(), w),
                     "criterion and rule weights disagree at vector " + std::to_string(vectors));
            return;
        }
        for (unsigned x = 0; x <= 4; ++x) {
            v[slot] = x;
            sweep(slot + 1);
        }
    };
    sweep(0);
    c.expect(vectors == 15625, "sweep size");
    c.note(std::to_string(vectors) + " vectors swept, " + std::to_string(filtrations) + " filtrations");

    std::mt19937 rng(20190601);
    std::uniform_int_distribution<unsigned> entry(0, 4);
    std::size_t agree = 0;
    for (int t = 0; t < 50; ++t) {
        std::vector<unsigned> r(6);
        for (auto& x : r) x = entry(rng);
        WeightVector w(r);
        auto check = check_filtration_product(bi.system(), w, 8, 4);
        agree += check.holds == is_filtration(w) ? 1 : 0;
        c.expect(check.holds == is_filtration(w), "product check disagrees with the criterion");
    }
    c.note(std::to_string(agree) + "/50 random vectors agree with the product check");

    c.equal(bi.parse("{X,Y}"), bi.parse("Z + kappa"), "{X,Y} = Z + kappa");
    // wZ > wX + wY: the witness pair Y, X escapes BI_{wX+wY}
    auto bad = check_filtration_product(bi.system(), WeightVector({1, 1, 3, 0, 0, 0}), 8, 2);
    c.expect(!bad.holds && bad.witness && bad.witness->degree > bad.witness->bound,
             "no witness for the failing vector (1,1,3,0,0,0)");
}

void criterion_7(Checker& c) {
    auto report = zeta_rank_check(40);
    std::size_t ok = 0;
    for (const auto& e : report.entries) {
        ok += e.matches ? 1 : 0;
        c.expect(e.matches, "top coefficient of " + e.top_monomial + ": " + e.computed.to_string() + " != " +
                                e.expected.to_string());
    }
    c.expect(!report.entries.empty(), "no monomials enumerated");
    c.note(std::to_string(ok) + "/" + std::to_string(report.entries.size()) + " top coefficients match");
}

void criterion_8(Checker& c) {
    auto report = zeta_rank_check(40);
    c.expect(report.full_rank, "coefficient matrix is rank deficient");
    c.expect(report.leading_map_injective, "leading tuple map is not injective");
    c.note("rank " + std::to_string(report.dimension_image) + " of " + std::to_string(report.dimension_source));
}

void criterion_9(Checker& c) {
    const auto& r = *racah();
    std::vector<Element> testers;
    for (const char* g : {"A", "B", "C", "D"}) testers.push_back(r.generator(g));
    const char* names[] = {"Omega_A", "Omega_B", "Omega_C"};
    std::vector<Element> omegas;
    for (const char* n : names) {
        omegas.push_back(r.element(n));
        c.expect(is_central(r, omegas.back(), testers), std::string(n) + " is not central");
        c.expect(solve_casimir_spec(omegas.back()).has_value(), std::string(n) + " is not in the Casimir class");
    }
    c.expect(!(omegas[0] == omegas[1]) && !(omegas[1] == omegas[2]) && !(omegas[0] == omegas[2]),
             "Omega_A, Omega_B, Omega_C are not distinct");
    const int sigma_to[] = {1, 0, 2}, tau_to[] = {1, 2, 0};
    for (int i = 0; i < 3; ++i) {
        c.equal(sigma_on("racah").apply(omegas[i]), omegas[sigma_to[i]], std::string("sigma(") + names[i] + ")");
        c.equal(tau_on("racah").apply(omegas[i]), omegas[tau_to[i]], std::string("tau(") + names[i] + ")");
    }
}

void criterion_10(Checker& c) {
    const auto& r = *racah();
    const auto& rb = *bi_rebased();
    const auto& bi = *bannai_ito();
    const char* names[] = {"Omega_A", "Omega_B", "Omega_C"};
    const char* labels[] = {"casimir A rebased", "casimir B rebased", "casimir C rebased"};
    CentralPolynomial pa;
    for (int i = 0; i < 3; ++i) {
        const Element omega = r.element(names[i]);
        CentralPolynomial p = express_casimir(omega);
        if (i == 0) pa = p;
        c.equal(central_in_rebased(p), rb.parse(corpus_entry(labels[i]).rhs), std::string(names[i]) + " formula");
        c.equal(central_in_bi(p), zeta().apply(omega), std::string(names[i]) + " round trip");
    }

    std::mt19937 rng(6);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), deg(0, 2), var(0, 3);
    for (int t = 0; t < 20; ++t) {
        CommPolynomial<4> q;
        const int nterms = 1 + t % 4;
        for (int k = 0; k < nterms; ++k) {
            CommPolynomial<4>::Exponents e{};
            for (int d = deg(rng); d > 0; --d) ++e[var(rng)];
            q.add_term(e, Scalar(num(rng), den(rng)));
        }
        const Element omega = r.reduce(r.element("Omega_A") + expand_correction(q));
        try {
            CentralPolynomial p = express_casimir(omega);
            c.expect(p == pa + correction_in_central(q), "P for Omega_A + Q differs from the substituted Q");
            c.equal(central_in_bi(p), zeta().apply(omega), "round trip for Omega_A + Q");
        } catch (const NotInCentralizerImage& e) {
            c.expect(false, e.what());
        }
    }
    c.note("3 D6-symmetric Casimirs and 20 random corrections");
    (void)bi;
}

void criterion_11(Checker& c) {
    for (const char* alg : {"racah", "bi"}) {
        auto rep = check_d6_relations(sigma_on(alg), tau_on(alg));
        c.expect(rep.sigma_squared, std::string("sigma^2 != 1 on ") + alg);
        c.expect(rep.tau_sixth, std::string("tau^6 != 1 on ") + alg);
        c.expect(rep.sigma_tau_squared, std::string("(sigma tau)^2 != 1 on ") + alg);
    }
    c.expect(check_equivariance(zeta(), D6Element::sigma()), "zeta is not sigma-equivariant");
    c.expect(check_equivariance(zeta(), D6Element::tau()), "zeta is not tau-equivariant");
}

void criterion_12(Checker& c) {
    const auto& bi = *bannai_ito();
    const auto w1 = WeightVector::parse("1,1,2,0,0,0");
    const Element iota = bi.element("iota"), Z = bi.generator("Z");
    for (unsigned n = 1; n <= 5; ++n) {
        Element d = power(bi, iota, n) - power(bi, Z, n);
        c.expect(weighted_degree(w1, d) <= static_cast<long>(2 * n - 1),
                 "iota^" + std::to_string(n) + " - Z^" + std::to_string(n) + " too large");
    }

    const auto w = WeightVector::parse("4,4,6,8,9,9");
    const auto& r = *racah();
    struct Law {
        const char* gen;
        const char* top;
        long denom;  // per power
        int sign;    // per power
        long weight;
    };
    const Law laws[] = {{"A", "X", 4, 1, 8},     {"B", "Y", 4, 1, 8},       {"C", "Z", 4, 1, 12},
                        {"alpha", "mu", 64, 1, 18}, {"beta", "lambda", 64, -1, 18}};
    for (unsigned n = 0; n <= 4; ++n) {
        for (const auto& law : laws) {
            Element img = zeta().apply(power(r, r.generator(law.gen), n));
            Scalar coeff = Scalar(n % 2 && law.sign < 0 ? -1 : 1) / Scalar(law.denom).pow(n);
            Element want = Element::monomial(bi.alphabet(), word_of(bi, {{law.top, 2 * n}}), coeff);
            const long top = law.weight * n;
            const std::string what = std::string(law.gen) + "^" + std::to_string(n);
            c.expect(weighted_degree(w, img) == top, what + " image degree");
            c.equal(leading_form(w, img, top), want, what + " leading form");
        }
        // D^n, with separate closed forms for even and odd n
        Element img = zeta().apply(power(r, r.generator("D"), n));
        Element want(bi.alphabet());
        const Scalar scale = Scalar(1) / Scalar(16).pow(n);
        const unsigned m = n / 2;
        for (unsigned i = 0; i <= m; ++i) {
            Scalar c0 = scale * Scalar(-4).pow(i) * Scalar(binomial(m, i));
            want += Element::monomial(bi.alphabet(), word_of(bi, {{"X", 2 * i}, {"Y", 2 * i}, {"Z", n}, {"kappa", n - 2 * i}}), c0);
            if (n % 2) {
                want += Element::monomial(
                    bi.alphabet(), word_of(bi, {{"X", 2 * i + 1}, {"Y", 2 * i + 1}, {"Z", n}, {"kappa", n - 2 * i - 1}}),
                    Scalar(-2) * c0);
            }
        }
        c.expect(weighted_degree(w, img) == 14 * static_cast<long>(n), "D^" + std::to_string(n) + " image degree");
        c.equal(leading_form(w, img, 14 * n), want, "D^" + std::to_string(n) + " leading form");
    }

    // exchange laws for powers of X, Y, Z
    for (unsigned n = 0; n <= 5; ++n) {
        const std::string N = std::to_string(n), M = std::to_string(n == 0 ? 0 : n - 1);
        const bool odd = n % 2;
        struct Case {
            std::string lhs, rhs;
            long bound;
        };
        const long n4 = 4 * static_cast<long>(n), n6 = 6 * static_cast<long>(n);
        std::vector<Case> cases;
        if (!odd) {
            cases = {{"Y^" + N + "*X", "X*Y^" + N, n4 + 3}, {"X^" + N + "*Y", "Y*X^" + N, n4 + 3},
                     {"Z^" + N + "*Y", "Y*Z^" + N, n6 + 3}, {"Y^" + N + "*Z", "Z*Y^" + N, n4 + 5},
                     {"X^" + N + "*Z", "Z*X^" + N, n4 + 5}, {"Z^" + N + "*X", "X*Z^" + N, n6 + 3}};
        } else {
            cases = {{"Y^" + N + "*X", "-X*Y^" + N + " + kappa*Y^" + M, n4 + 3},
                     {"X^" + N + "*Y", "-Y*X^" + N + " + kappa*X^" + M, n4 + 3},
                     {"Y^" + N + "*Z", "-Z*Y^" + N, n4 + 5},
                     {"Z^" + N + "*Y", "-Y*Z^" + N, n6 + 3},
                     {"X^" + N + "*Z", "-Z*X^" + N, n4 + 5},
                     {"Z^" + N + "*X", "-X*Z^" + N, n6 + 3}};
        }
        for (const auto& cs : cases) {
            Element d = bi.parse(cs.lhs) - bi.parse(cs.rhs);
            c.expect(weighted_degree(w, d) <= cs.bound,
                     cs.lhs + " = " + cs.rhs + " fails modulo BI_" + std::to_string(cs.bound));
        }
    }
}

struct CriterionDef {
    int id;
    const char* title;
    void (*run)(Checker&);
    double time_limit;  // seconds, 0 for none
};

const CriterionDef kCriteria[] = {
    {1, "Racah confluence and the four overlap completions", criterion_1, 1},
    {2, "BI and rebased confluence; irreducible words are ordered monomials", criterion_2, 0},
    {3, "zeta respects the Racah relations; images of alpha, beta, gamma, delta", criterion_3, 5},
    {4, "zeta(D) and its leading forms under (4,4,6,8,9,9)", criterion_4, 0},
    {5, "bracket identities for squares and the element L", criterion_5, 0},
    {6, "filtration criterion: sweep, random product checks, witness", criterion_6, 0},
    {7, "top coefficients of zeta images up to weight 40", criterion_7, 60},
    {8, "zeta rank check at weight 40", criterion_8, 0},
    {9, "D6-symmetric Casimir elements: central, distinct, permuted", criterion_9, 0},
    {10, "Casimir elements as polynomials in iota, kappa, lambda, mu", criterion_10, 60},
    {11, "D6 relations and zeta equivariance", criterion_11, 0},
    {12, "power congruences in the filtrations", criterion_12, 0},
};

}  // namespace

std::vector<Identity> parse_identities(std::string_view text) {
    std::vector<Identity> out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::size_t p = 0;
        while (true) {
            std::size_t bar = line.find('|', p);
            fields.push_back(trim(line.substr(p, bar == std::string_view::npos ? std::string_view::npos : bar - p)));
            if (bar == std::string_view::npos) break;
            p = bar + 1;
        }
        if (fields.size() != 4) throw ParseError("expected 'label | kind | lhs | rhs'", line_no, 1);
        if (!kKinds.count(fields[1])) throw ParseError("unknown identity kind '" + fields[1] + "'", line_no, 1);
        out.push_back(Identity{fields[0], fields[1], fields[2], fields[3], line_no});
    }
    return out;
}

std::vector<Identity> builtin_identities() { return parse_identities(builtin_identity_text()); }

IdentityResult check_identity(const Identity& id) {
    IdentityResult res{id, false, {}};
    try {
        Element lhs, rhs;
        const std::string& k = id.kind;
        if (k == "racah" || k == "bi" || k == "rebased") {
            auto p = presentation_by_name(k);
            lhs = p->parse(id.lhs);
            rhs = p->parse(id.rhs);
        } else if (k == "zeta") {
            lhs = zeta().apply(std::string_view(id.lhs));
            rhs = bannai_ito()->parse(id.rhs);
        } else if (k == "zeta-rebased") {
            lhs = rebase_to_iota(zeta().apply(std::string_view(id.lhs)));
            rhs = bi_rebased()->parse(id.rhs);
        } else {
            const std::string alg = k.substr(k.find('-') + 1);
            const AlgebraMap& m = k.starts_with("sigma") ? sigma_on(alg) : tau_on(alg);
            lhs = m.apply(std::string_view(id.lhs));
            rhs = m.target()->parse(id.rhs);
        }
        res.passed = lhs == rhs;
        if (!res.passed) res.detail = "lhs - rhs = " + (lhs - rhs).to_text();
    } catch (const std::exception& e) {
        res.detail = e.what();
    }
    return res;
}

CriterionResult run_criterion(int id) {
    for (const auto& def : kCriteria) {
        if (def.id != id) continue;
        CriterionResult res{def.id, def.title, false, {}, 0};
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            def.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (def.time_limit > 0 && res.seconds >= def.time_limit) {
            c.expect(false, "runtime " + std::to_string(res.seconds) + " s over the " +
                                std::to_string(static_cast<int>(def.time_limit)) + " s limit");
        }
        res.passed = c.ok();
        res.detail = c.detail();
        return res;
    }
    throw std::out_of_range("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only) {
    std::vector<CriterionResult> out;
    for (const auto& def : kCriteria) {
        if (only.empty() || std::find(only.begin(), only.end(), def.id) != only.end()) {
            out.push_back(run_criterion(def.id));
        }
    }
    return out;
}

nlohmann::json to_json(const CriterionResult& r) {
    return {{"id", r.id}, {"title", r.title}, {"pass", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}};
}

nlohmann::json to_json(const IdentityResult& r) {
    return {{"label", r.identity.label},
            {"kind", r.identity.kind},
            {"line", r.identity.line},
            {"pass", r.passed},
            {"detail", r.detail}};
}

}  // namespace ncalg
