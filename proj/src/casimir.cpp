#include "ncalg/casimir.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace ncalg {

bool is_central(const Presentation& p, const Element& e, const std::vector<Element>& testers) {
    std::vector<Element> with = testers;
    if (with.empty()) {
        for (const auto& g : p.alphabet()->symbols()) with.push_back(Element::generator(p.alphabet(), g.rank));
    }
    for (const auto& t : with) {
        if (!p.reduce(commutator(e, t)).is_zero()) return false;
    }
    return true;
}

Element casimir_base() {
    static const Element base = racah()->parse(
        "D^2 + A^2 + B^2 + 1/2*((delta + 2)*{A, B} - {A^2, B} - {A, B^2}) + A*(beta - delta) - B*(delta + alpha)");
    return base;
}

namespace {

Element evaluate_poly(const CommPolynomial<4>& q, const std::array<Element, 4>& values, const Presentation& p) {
    Element out(p.alphabet());
    for (const auto& [e, c] : q.terms()) {
        Element term(p.alphabet(), c);
        for (std::size_t v = 0; v < 4; ++v) {
            for (unsigned n = 0; n < e[v]; ++n) term = p.reduce(term * values[v]);
        }
        out += term;
    }
    return out;
}

/// Solves sum_i x_i columns[i] = target over Q; empty when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<Element>& columns, const Element& target) {
    std::map<Word, std::size_t, GradedLex> row_of;
    auto index = [&](const Word& w) { return row_of.try_emplace(w, row_of.size()).first->second; };
    for (const auto& col : columns) {
        for (const auto& [w, c] : col.terms()) index(w);
    }
    for (const auto& [w, c] : target.terms()) index(w);
    const std::size_t rows = row_of.size(), cols = columns.size();
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        for (const auto& [w, c] : columns[j].terms()) m[row_of[w]][j] = c;
    }
    for (const auto& [w, c] : target.terms()) m[row_of[w]][cols] = c;

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && m[p][j].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = Scalar(1) / m[r][j];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][j].is_zero()) continue;
            Scalar f = m[i][j];
            for (std::size_t k = j; k <= cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!m[i][cols].is_zero()) return std::nullopt;
    }
    std::vector<Scalar> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

std::array<Element, 4> racah_correction_values() {
    const auto& r = *racah();
    return {r.generator("alpha"), r.generator("beta"), r.element("gamma"), r.element("delta")};
}

}  // namespace

Element expand_correction(const CommPolynomial<4>& q) {
    return evaluate_poly(q, racah_correction_values(), *racah());
}

Element casimir_element(const CasimirSpec& spec) { return casimir_base() + expand_correction(spec.correction); }

std::optional<CasimirSpec> solve_casimir_spec(const Element& omega) {
    const auto& r = *racah();
    Element diff = r.reduce(omega) - casimir_base();
    const long bound = std::max(0L, diff.degree());
    std::vector<CommPolynomial<4>::Exponents> candidates;
    std::vector<Element> columns;
    // the Casimir-class freedom is spanned by α^a β^b δ^d (γ = -α - β)
    for (unsigned a = 0; a <= bound; ++a) {
        for (unsigned b = 0; a + b <= bound; ++b) {
            for (unsigned d = 0; a + b + d <= bound; ++d) {
                CommPolynomial<4>::Exponents e{a, b, 0, d};
                CommPolynomial<4> mono;
                mono.add_term(e, Scalar(1));
                candidates.push_back(e);
                columns.push_back(expand_correction(mono));
            }
        }
    }
    auto x = solve_linear(columns, diff);
    if (!x) return std::nullopt;
    CasimirSpec spec;
    for (std::size_t i = 0; i < candidates.size(); ++i) spec.correction.add_term(candidates[i], (*x)[i]);
    return spec;
}

CentralPolynomial express_casimir(const Element& omega) {
    const auto& rb = *bi_rebased();
    const Symbol X = rb.alphabet()->at("X"), Y = rb.alphabet()->at("Y");
    const std::array<Symbol, 4> vars{rb.alphabet()->at("iota"), rb.alphabet()->at("kappa"),
                                     rb.alphabet()->at("lambda"), rb.alphabet()->at("mu")};
    Element rebased = rebase_to_iota(zeta().apply(racah()->reduce(omega)));
    CentralPolynomial p;
    std::vector<std::string> offending;
    for (const auto& [w, c] : rebased.terms()) {
        if (w.count(X) || w.count(Y)) {
            offending.push_back(Element::monomial(rb.alphabet(), w, c).to_text());
            continue;
        }
        CentralPolynomial::Exponents e{};
        for (std::size_t v = 0; v < 4; ++v) e[v] = static_cast<unsigned>(w.count(vars[v]));
        p.add_term(e, c);
    }
    if (!offending.empty()) {
        std::string what = "zeta image has " + std::to_string(offending.size()) +
                           " monomials involving X or Y; not a polynomial in iota, kappa, lambda, mu";
        throw NotInCentralizerImage(what, std::move(offending));
    }
    return p;
}

Element central_in_rebased(const CentralPolynomial& p) {
    const auto& rb = *bi_rebased();
    return evaluate_poly(p, {rb.generator("iota"), rb.generator("kappa"), rb.generator("lambda"), rb.generator("mu")},
                         rb);
}

Element central_in_bi(const CentralPolynomial& p) {
    const auto& b = *bannai_ito();
    return evaluate_poly(p, {b.element("iota"), b.generator("kappa"), b.generator("lambda"), b.generator("mu")}, b);
}

CentralPolynomial correction_in_central(const CommPolynomial<4>& q) {
    using P = CentralPolynomial;
    const P i = P::variable(0), k = P::variable(1), l = P::variable(2), m = P::variable(3);
    const P two(Scalar(2)), three(Scalar(3));
    const Scalar s64(1, 64);
    const std::array<P, 4> values{
        P(s64) * (two * i - k - m - three) * (k - m),
        P(s64) * (two * i - l - k - three) * (l - k),
        P(s64) * (two * i - m - l - three) * (m - l),
        P(Scalar(1, 4)) * (i * i - two * i - k - l - m) - P(Scalar(9, 16)),
    };
    P out;
    for (const auto& [e, c] : q.terms()) {
        P term(c);
        for (std::size_t v = 0; v < 4; ++v) term = term * values[v].pow(e[v]);
        out += term;
    }
    return out;
}

std::size_t rank_of(const std::vector<Element>& rows) {
    std::map<Word, std::size_t, GradedLex> col_of;
    for (const auto& r : rows) {
        for (const auto& [w, c] : r.terms()) col_of.try_emplace(w, col_of.size());
    }
    const std::size_t ncols = col_of.size();
    // clear denominators row by row, then eliminate over Z
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : rows) {
        mpz_class lcm = 1;
        for (const auto& [w, c] : r.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> row(ncols, 0);
        for (const auto& [w, c] : r.terms()) row[col_of[w]] = c.numerator() * (lcm / c.denominator());
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t j = 0; j < ncols && rank < m.size(); ++j) {
        std::size_t p = rank;
        while (p < m.size() && m[p][j] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][j] == 0) continue;
            mpz_class a = m[rank][j], b = m[i][j];
            mpz_class g;
            for (std::size_t k = j; k < ncols; ++k) {
                m[i][k] = a * m[i][k] - b * m[rank][k];
                g = gcd(g, m[i][k]);
            }
            if (g > 1) {
                for (std::size_t k = j; k < ncols; ++k) m[i][k] /= g;
            }
        }
        ++rank;
    }
    return rank;
}

ZetaRankReport zeta_rank_check(int max_weight) {
    ZetaRankReport report;
    report.max_weight = max_weight;
    const AlgebraMap& z = zeta();
    const auto& bi = *bannai_ito();
    const auto& bsys = bi.system();
    const std::array<int, 6> weight{8, 8, 12, 14, 18, 18};

    std::unordered_map<Word, Element, WordHash> cache;
    cache.emplace(Word(), Element(bi.alphabet(), Scalar(1)));
    auto image_of = [&](auto&& self, const Word& w) -> const Element& {
        if (auto it = cache.find(w); it != cache.end()) return it->second;
        const Element& head = self(self, w.subword(0, w.size() - 1));
        Element v = normal_form(bsys, head * z.images()[w[w.size() - 1]]);
        return cache.emplace(w, std::move(v)).first->second;
    };

    const Symbol X = bi.alphabet()->at("X"), Y = bi.alphabet()->at("Y"), Zs = bi.alphabet()->at("Z");
    const Symbol K = bi.alphabet()->at("kappa"), L = bi.alphabet()->at("lambda"), M = bi.alphabet()->at("mu");

    std::vector<Element> images;
    std::set<std::array<unsigned, 6>> leading;
    report.top_coefficients_match = true;
    std::array<unsigned, 6> e{};
    auto visit = [&](auto&& self, std::size_t slot, int used) -> void {
        if (slot == 6) {
            std::string letters;
            for (std::size_t g = 0; g < 6; ++g) letters.append(e[g], static_cast<char>(g));
            const Element& img = image_of(image_of, Word(letters));
            images.push_back(img);
            const auto [i, j, k, l, r, s] = e;
            std::string top;
            top.append(2 * i, static_cast<char>(X));
            top.append(2 * j, static_cast<char>(Y));
            top.append(2 * k + l, static_cast<char>(Zs));
            top.append(l, static_cast<char>(K));
            top.append(2 * s, static_cast<char>(L));
            top.append(2 * r, static_cast<char>(M));
            RankEntry entry;
            entry.exponents = e;
            entry.top_monomial = word_to_text(*bi.alphabet(), Word(top));
            entry.expected = Scalar(s % 2 ? -1 : 1) * Scalar(4).pow(-static_cast<long>(i + j + k + 2 * l + 3 * r + 3 * s));
            entry.computed = img.coefficient(Word(top));
            entry.matches = entry.expected == entry.computed;
            report.top_coefficients_match = report.top_coefficients_match && entry.matches;
            report.entries.push_back(std::move(entry));
            leading.insert({2 * i, 2 * j, 2 * k + l, l, 2 * s, 2 * r});
            return;
        }
        for (unsigned n = 0; used + static_cast<int>(n) * weight[slot] <= max_weight; ++n) {
            e[slot] = n;
            self(self, slot + 1, used + static_cast<int>(n) * weight[slot]);
        }
        e[slot] = 0;
    };
    if (max_weight >= 0) visit(visit, 0, 0);

    report.dimension_source = images.size();
    report.dimension_image = rank_of(images);
    report.full_rank = report.dimension_image == report.dimension_source;
    report.leading_map_injective = leading.size() == images.size();
    return report;
}

nlohmann::json ZetaRankReport::to_json() const {
    nlohmann::json j;
    j["max_weight"] = max_weight;
    j["dimension_source"] = dimension_source;
    j["dimension_image"] = dimension_image;
    j["full_rank"] = full_rank;
    j["leading_map_injective"] = leading_map_injective;
    j["top_coefficients_match"] = top_coefficients_match;
    j["pass"] = passed();
    auto& list = j["monomials"] = nlohmann::json::array();
    for (const auto& e : entries) {
        list.push_back({{"exponents", e.exponents},
                        {"top_monomial", e.top_monomial},
                        {"expected", e.expected.to_string()},
                        {"computed", e.computed.to_string()},
                        {"match", e.matches}});
    }
    return j;
}

}  // namespace ncalg
