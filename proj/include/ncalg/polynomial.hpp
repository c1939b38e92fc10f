#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "ncalg/scalar.hpp"

namespace ncalg {

/// Commutative polynomial in N variables with rational coefficients.
template <std::size_t N>
class CommPolynomial {
public:
    using Exponents = std::array<unsigned, N>;
    using Terms = std::map<Exponents, Scalar>;

    CommPolynomial() = default;
    CommPolynomial(const Scalar& c) { add_term(Exponents{}, c); }

    static CommPolynomial variable(std::size_t i) {
        Exponents e{};
        e.at(i) = 1;
        CommPolynomial p;
        p.add_term(e, Scalar(1));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Total degree; -1 for zero.
    long degree() const {
        long best = -1;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (unsigned x : e) d += x;
            best = std::max(best, d);
        }
        return best;
    }

    void add_term(const Exponents& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh && (it->second += c).is_zero()) terms_.erase(it);
    }

    CommPolynomial& operator+=(const CommPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CommPolynomial& operator-=(const CommPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend CommPolynomial operator+(CommPolynomial a, const CommPolynomial& b) { return a += b; }
    friend CommPolynomial operator-(CommPolynomial a, const CommPolynomial& b) { return a -= b; }
    CommPolynomial operator-() const { return CommPolynomial() - *this; }

    friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
        CommPolynomial r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    CommPolynomial pow(unsigned n) const {
        CommPolynomial r(Scalar(1));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const CommPolynomial&, const CommPolynomial&) = default;

    /// Terms by ascending total degree, then exponent tuple.
    std::string to_text(const std::array<std::string, N>& names) const {
        if (terms_.empty()) return "0";
        std::multimap<std::pair<long, Exponents>, const Scalar*> ordered;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (unsigned x : e) d += x;
            // larger exponents of earlier variables first within a degree
            Exponents key;
            for (std::size_t i = 0; i < N; ++i) key[i] = ~e[i];
            ordered.emplace(std::make_pair(d, key), &c);
        }
        std::string out;
        bool first = true;
        for (const auto& [key, cp] : ordered) {
            const Scalar& c = *cp;
            Scalar mag = c.sign() < 0 ? -c : c;
            out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < N; ++i) {
                unsigned x = ~key.second[i];
                if (x == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (x > 1) mono += "^" + std::to_string(x);
            }
            if (mono.empty()) {
                out += mag.to_string();
            } else {
                if (!mag.is_one()) out += mag.to_string() + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace ncalg
