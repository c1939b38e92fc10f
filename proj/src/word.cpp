#include "ncalg/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncalg {

Alphabet::Alphabet(const std::vector<std::string>& entries) {
    if (entries.size() > 255) throw std::invalid_argument("alphabet too large");
    for (const auto& entry : entries) {
        GenSymbol g;
        auto eq = entry.find('=');
        g.name = entry.substr(0, eq);
        if (eq != std::string::npos) g.display = entry.substr(eq + 1);
        g.rank = static_cast<Symbol>(symbols_.size());
        if (g.name.empty()) throw std::invalid_argument("empty generator name");
        if (find(g.name) || (!g.display.empty() && find(g.display))) {
            throw std::invalid_argument("duplicate generator '" + g.name + "'");
        }
        symbols_.push_back(std::move(g));
    }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (const auto& g : symbols_) {
        if (g.name == name || (!g.display.empty() && g.display == name)) return g.rank;
    }
    return std::nullopt;
}

Symbol Alphabet::at(std::string_view name) const {
    if (auto s = find(name)) return *s;
    throw std::out_of_range("unknown generator '" + std::string(name) + "'");
}

bool Alphabet::same_as(const Alphabet& other) const {
    if (this == &other) return true;
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (symbols_[i].name != other.symbols_[i].name) return false;
    }
    return true;
}

Word::Word(std::initializer_list<Symbol> symbols) {
    for (Symbol s : symbols) letters_.push_back(static_cast<char>(s));
}

Word Word::splice(std::size_t pos, std::size_t len, const Word& replacement) const {
    std::string out;
    out.reserve(letters_.size() - len + replacement.size());
    out.append(letters_, 0, pos);
    out.append(replacement.letters_);
    out.append(letters_, pos + len, std::string::npos);
    return Word(std::move(out));
}

std::size_t Word::count(Symbol s) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(s)));
}

std::string word_to_text(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += '*';
        out += alphabet[w[i]].name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

bool is_ordered_monomial(const Word& w) {
    return std::is_sorted(w.bytes().begin(), w.bytes().end(),
                          [](char a, char b) { return static_cast<Symbol>(a) < static_cast<Symbol>(b); });
}

}  // namespace ncalg
