#include "ncalg/element.hpp"

#include "json.hpp"

namespace ncalg {

Element::Element(AlphabetPtr alphabet, const Scalar& constant) : alphabet_(std::move(alphabet)) {
    if (!constant.is_zero()) terms_.emplace(Word(), constant);
}

Element::Element(AlphabetPtr alphabet, Terms terms) : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
    if (!alphabet_) {
        for (const auto& [w, c] : terms_) {
            if (!w.empty()) throw AlphabetMismatch("non-constant element without an alphabet");
        }
    }
}

Element Element::generator(AlphabetPtr alphabet, Symbol s) {
    if (!alphabet || s >= alphabet->size()) throw std::out_of_range("generator out of range");
    return monomial(std::move(alphabet), Word{s});
}

Element Element::monomial(AlphabetPtr alphabet, Word w, const Scalar& coeff) {
    Element e(std::move(alphabet));
    e.add_term(w, coeff);
    return e;
}

Scalar Element::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

long Element::degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.size());
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlphabetPtr Element::common(const Element& a, const Element& b) {
    if (!a.alphabet_) return b.alphabet_;
    if (!b.alphabet_) return a.alphabet_;
    if (!a.alphabet_->same_as(*b.alphabet_)) throw AlphabetMismatch("elements over different alphabets");
    return a.alphabet_;
}

Element& Element::operator+=(const Element& o) {
    alphabet_ = common(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    alphabet_ = common(*this, o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::operator-() const {
    Element r(alphabet_);
    for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
    return r;
}

Element operator*(const Element& a, const Element& b) {
    Element r(Element::common(a, b));
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
    }
    return r;
}

Element operator*(const Scalar& c, const Element& a) {
    Element r(a.alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * x);
    return r;
}

bool operator==(const Element& a, const Element& b) {
    if (a.alphabet_ && b.alphabet_ && !a.alphabet_->same_as(*b.alphabet_)) return false;
    return a.terms_ == b.terms_;
}

std::string Element::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += word_to_text(*alphabet_, w);
        }
    }
    return out;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
Element scale(const Scalar& c, const Element& a) { return c * a; }
Element commutator(const Element& a, const Element& b) { return a * b - b * a; }
Element anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

nlohmann::json element_to_json(const Element& e) {
    auto out = nlohmann::json::array();
    for (const auto& [w, c] : e.terms()) {
        auto word = nlohmann::json::array();
        for (std::size_t i = 0; i < w.size(); ++i) word.push_back((*e.alphabet())[w[i]].name);
        out.push_back({{"word", word}, {"coeff", c.to_string()}});
    }
    return out;
}

Element element_from_json(AlphabetPtr alphabet, const nlohmann::json& j) {
    Element e(alphabet);
    for (const auto& term : j) {
        std::string letters;
        for (const auto& name : term.at("word")) {
            letters.push_back(static_cast<char>(alphabet->at(name.get<std::string>())));
        }
        e.add_term(Word(letters), Scalar::parse(term.at("coeff").get<std::string>()));
    }
    return e;
}

}  // namespace ncalg
