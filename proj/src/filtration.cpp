#include "ncalg/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace ncalg {

WeightVector WeightVector::parse(std::string_view text) {
    std::vector<unsigned> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
        }
        if (v < 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument("weight '" + item + "' is not a nonnegative integer");
        }
        out.push_back(static_cast<unsigned>(v));
    }
    if (out.empty()) throw std::invalid_argument("empty weight vector");
    return WeightVector(std::move(out));
}

unsigned long WeightVector::of(const Word& w) const {
    unsigned long total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += weights_.at(w[i]);
    return total;
}

bool is_filtration(const WeightVector& w) {
    if (w.size() != 6) throw std::invalid_argument("BI weight vectors have six entries");
    const unsigned x = w[0], y = w[1], z = w[2], k = w[3], l = w[4], m = w[5];
    return std::max(z, k) <= x + y && std::max(x, l) <= y + z && std::max(y, m) <= z + x;
}

bool rules_respect_weights(const ReductionSystem& sys, const WeightVector& w) {
    for (const Rule& r : sys.rules()) {
        for (const auto& [word, c] : r.rhs.terms()) {
            if (w.of(word) > w.of(r.lhs)) return false;
        }
    }
    return true;
}

long weighted_degree(const WeightVector& w, const Element& e) {
    long best = -1;
    for (const auto& [word, c] : e.terms()) best = std::max(best, static_cast<long>(w.of(word)));
    return best;
}

long weighted_degree(const ReductionSystem& sys, const WeightVector& w, const Element& e) {
    if (!is_normal(sys, e)) throw NotIrreducible("weighted_degree needs an element in normal form");
    return weighted_degree(w, e);
}

Element leading_form(const WeightVector& w, const Element& e, long n) {
    Element out(e.alphabet());
    for (const auto& [word, c] : e.terms()) {
        if (static_cast<long>(w.of(word)) >= n) out.add_term(word, c);
    }
    return out;
}

std::vector<Word> ordered_monomials(std::size_t alphabet_size, const WeightVector& w, long max_degree,
                                    std::size_t max_length) {
    std::vector<Word> out;
    std::string cur;
    auto grow = [&](auto&& self, Symbol from, long degree) -> void {
        out.emplace_back(cur);
        if (cur.size() == max_length) return;
        for (std::size_t s = from; s < alphabet_size; ++s) {
            long next = degree + static_cast<long>(w[s]);
            if (next > max_degree) continue;
            cur.push_back(static_cast<char>(s));
            self(self, static_cast<Symbol>(s), next);
            cur.pop_back();
        }
    };
    grow(grow, 0, 0);
    return out;
}

ProductCheck check_filtration_product(const ReductionSystem& sys, const WeightVector& w, long sample_degree,
                                      std::size_t max_length) {
    ProductCheck check;
    auto monomials = ordered_monomials(sys.alphabet()->size(), w, sample_degree, max_length);
    std::erase_if(monomials, [&](const Word& m) { return !sys.is_irreducible(m); });
    for (const Word& u : monomials) {
        for (const Word& v : monomials) {
            ++check.pairs_checked;
            Element product = normal_form(sys, Element::monomial(sys.alphabet(), u * v));
            long bound = static_cast<long>(w.of(u) + w.of(v));
            long degree = weighted_degree(w, product);
            if (degree > bound) {
                check.holds = false;
                check.witness = ProductWitness{u, v, std::move(product), bound, degree};
                return check;
            }
        }
    }
    return check;
}

}  // namespace ncalg
