#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

/// Index of a generator in its alphabet; also its rank in the total order.
using Symbol = std::uint8_t;

struct GenSymbol {
    std::string name;     // ASCII, shell-safe; used for canonical text
    std::string display;  // optional Unicode spelling, accepted on input
    Symbol rank = 0;
};

/// Ordered, immutable generator alphabet.
class Alphabet {
public:
    /// Each entry is either "name" or "name=display".
    explicit Alphabet(const std::vector<std::string>& entries);

    static std::shared_ptr<const Alphabet> make(const std::vector<std::string>& entries) {
        return std::make_shared<const Alphabet>(entries);
    }

    std::size_t size() const { return symbols_.size(); }
    const GenSymbol& operator[](Symbol s) const { return symbols_.at(s); }
    const std::vector<GenSymbol>& symbols() const { return symbols_; }

    /// Resolves a generator by ASCII name or display spelling.
    std::optional<Symbol> find(std::string_view name) const;
    Symbol at(std::string_view name) const;

    bool same_as(const Alphabet& other) const;

private:
    std::vector<GenSymbol> symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Element of the free monoid: a finite sequence of symbols (empty = unit).
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Symbol> symbols);
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    static Word power(Symbol s, std::size_t n) { return Word(std::string(n, static_cast<char>(s))); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Symbol operator[](std::size_t i) const { return static_cast<Symbol>(letters_[i]); }

    Word subword(std::size_t pos, std::size_t len = std::string::npos) const {
        return Word(letters_.substr(pos, len));
    }
    /// Position of the first occurrence of `w`, or npos.
    std::size_t find(const Word& w, std::size_t from = 0) const { return letters_.find(w.letters_, from); }
    Word reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend())); }

    /// Replaces `len` symbols at `pos` by `replacement`.
    Word splice(std::size_t pos, std::size_t len, const Word& replacement) const;

    /// Number of occurrences of symbol `s`.
    std::size_t count(Symbol s) const;

    const std::string& bytes() const { return letters_; }

    friend Word operator*(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
    friend bool operator==(const Word&, const Word&) = default;

    static constexpr std::size_t npos = std::string::npos;

private:
    std::string letters_;
};

/// Graded-lexicographic order: shorter words first, then by symbol rank.
struct GradedLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bytes().compare(b.bytes()) < 0;  // char_traits compare is unsigned
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.bytes()); }
};

/// `X^2*Y*kappa`; "1" for the empty word.
std::string word_to_text(const Alphabet& alphabet, const Word& w);

/// True when the word's symbols are in nondecreasing rank order.
bool is_ordered_monomial(const Word& w);

}  // namespace ncalg
