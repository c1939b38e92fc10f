#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ncalg/scalar.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

class AlphabetMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Formal rational-linear combination of words. Zero coefficients are never
/// stored and terms iterate in graded-lex order.
///
/// An element without an alphabet holds at most a constant term; it combines
/// with elements over any alphabet.
class Element {
public:
    using Terms = std::map<Word, Scalar, GradedLex>;

    Element() = default;
    explicit Element(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    Element(AlphabetPtr alphabet, const Scalar& constant);
    Element(AlphabetPtr alphabet, Terms terms);

    static Element generator(AlphabetPtr alphabet, Symbol s);
    static Element monomial(AlphabetPtr alphabet, Word w, const Scalar& coeff = Scalar(1));
    static Element constant(const Scalar& c) { return Element(nullptr, c); }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;
    /// Longest word length, -1 for zero.
    long degree() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    /// Free-algebra product (concatenation); no reduction.
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& a);
    friend bool operator==(const Element& a, const Element& b);

    /// Canonical text: terms ascending in graded-lex order, `p/q*word`.
    std::string to_text() const;

    /// Adds c·w in place.
    void add_term(const Word& w, const Scalar& c);

private:
    static AlphabetPtr common(const Element& a, const Element& b);

    AlphabetPtr alphabet_;
    Terms terms_;
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
Element commutator(const Element& a, const Element& b);
Element anticommutator(const Element& a, const Element& b);

/// JSON list of {"word": [symbol...], "coeff": "p/q"} in canonical order.
nlohmann::json element_to_json(const Element& e);
Element element_from_json(AlphabetPtr alphabet, const nlohmann::json& j);

}  // namespace ncalg
