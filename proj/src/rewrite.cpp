#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <stdexcept>
#include <unordered_set>

namespace ncalg {

bool Rule::is_commutation() const {
    if (rhs.size() != 1) return false;
    const auto& [w, c] = *rhs.terms().begin();
    if (!c.is_one() || w.size() != lhs.size()) return false;
    std::string a = w.bytes(), b = lhs.bytes();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

TermOrder::TermOrder(std::vector<unsigned> weights, std::vector<Symbol> descent_chain)
    : weights_(std::move(weights)), chain_(std::move(descent_chain)) {}

TermOrder TermOrder::length_order(std::size_t alphabet_size) {
    return TermOrder(std::vector<unsigned>(alphabet_size, 1));
}

unsigned long TermOrder::weight(const Word& w) const {
    unsigned long total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += weights_.at(w[i]);
    return total;
}

bool TermOrder::less(const Word& u, const Word& w) const {
    auto wu = weight(u), ww = weight(w);
    if (wu != ww) return wu < ww;
    if (u.size() != w.size()) return u.size() < w.size();
    return u != w && reachable(w, u);
}

bool TermOrder::reachable(const Word& from, const Word& to) const {
    // Elementary operations preserve the symbol count and strictly decrease
    // (chain rank sum, inversion count), so the search space is finite.
    std::unordered_set<std::string> seen{from.bytes()};
    std::deque<std::string> queue{from.bytes()};
    auto visit = [&](std::string next) {
        if (next == to.bytes()) return true;
        if (seen.insert(next).second) queue.push_back(std::move(next));
        return false;
    };
    while (!queue.empty()) {
        std::string cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < cur.size(); ++i) {
            auto si = static_cast<Symbol>(cur[i]);
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                if (static_cast<Symbol>(cur[j]) < si) {
                    std::string next = cur;
                    std::swap(next[i], next[j]);
                    if (visit(std::move(next))) return true;
                }
            }
            auto at = std::find(chain_.begin(), chain_.end(), si);
            if (at != chain_.end() && at != chain_.begin()) {
                std::string next = cur;
                next[i] = static_cast<char>(*(at - 1));
                if (visit(std::move(next))) return true;
            }
        }
    }
    return false;
}

ReductionSystem::ReductionSystem(AlphabetPtr alphabet, std::vector<Rule> rules, TermOrder order)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), order_(std::move(order)) {
    if (!alphabet_) throw std::invalid_argument("reduction system without alphabet");
    if (order_.weights().size() != alphabet_->size()) {
        throw std::invalid_argument("term order weights do not match the alphabet");
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        std::string shown = word_to_text(*alphabet_, r.lhs);
        if (r.lhs.size() < 2) throw std::invalid_argument("rule " + shown + ": lhs must have length >= 2");
        for (std::size_t k = 0; k < r.lhs.size(); ++k) {
            if (r.lhs[k] >= alphabet_->size()) throw AlphabetMismatch("rule " + shown + ": symbol out of range");
        }
        if (r.rhs.alphabet() && !r.rhs.alphabet()->same_as(*alphabet_)) {
            throw AlphabetMismatch("rule " + shown + ": rhs over another alphabet");
        }
        if (!r.rhs.coefficient(r.lhs).is_zero()) {
            throw std::invalid_argument("rule " + shown + ": lhs occurs in its own rhs");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (rules_[j].lhs == r.lhs) throw std::invalid_argument("rule " + shown + ": duplicate lhs");
        }
    }
    termination_ = check_termination(*this);
}

std::optional<ReductionSystem::Redex> ReductionSystem::find_redex(const Word& w) const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        auto pos = w.find(rules_[i].lhs);
        if (pos != Word::npos) return Redex{i, pos};
    }
    return std::nullopt;
}

TerminationReport check_termination(const ReductionSystem& sys) {
    TerminationReport report;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
        const Rule& r = sys.rules()[i];
        for (const auto& [w, c] : r.rhs.terms()) {
            if (!sys.order().less(w, r.lhs)) report.violations.push_back({i, w});
        }
    }
    report.terminates = report.violations.empty();
    return report;
}

namespace {

Element reduce_terms(const ReductionSystem& sys, Element::Terms pending) {
    Element::Terms done;
    // Always rewrite the graded-lex largest pending word; for systems whose
    // rules decrease graded-lex this touches each word once.
    while (!pending.empty()) {
        auto last = std::prev(pending.end());
        Word w = last->first;
        Scalar c = std::move(last->second);
        pending.erase(last);
        auto redex = sys.find_redex(w);
        if (!redex) {
            auto [it, fresh] = done.try_emplace(w, c);
            if (!fresh && (it->second += c).is_zero()) done.erase(it);
            continue;
        }
        const Rule& rule = sys.rules()[redex->rule];
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word next = w.splice(redex->pos, rule.lhs.size(), rw);
            Scalar add = c * rc;
            auto [it, fresh] = pending.try_emplace(std::move(next), add);
            if (!fresh && (it->second += add).is_zero()) pending.erase(it);
        }
    }
    return Element(sys.alphabet(), std::move(done));
}

}  // namespace

Element normal_form(const ReductionSystem& sys, const Element& e) {
    if (!sys.termination().terminates) {
        throw std::logic_error("reduction system failed its termination check");
    }
    if (e.alphabet() && !e.alphabet()->same_as(*sys.alphabet())) {
        throw AlphabetMismatch("element and reduction system use different alphabets");
    }
    return reduce_terms(sys, e.terms());
}

bool is_normal(const ReductionSystem& sys, const Element& e) {
    return std::all_of(e.terms().begin(), e.terms().end(),
                       [&](const auto& t) { return sys.is_irreducible(t.first); });
}

namespace {

Element apply_at(const ReductionSystem& sys, const Word& w, std::size_t rule, std::size_t pos) {
    const Rule& r = sys.rules()[rule];
    Element out(sys.alphabet());
    for (const auto& [rw, rc] : r.rhs.terms()) out.add_term(w.splice(pos, r.lhs.size(), rw), rc);
    return normal_form(sys, out);
}

OverlapReport make_report(const ReductionSystem& sys, Word word, std::size_t first, std::size_t second,
                          std::size_t pos, bool inclusion) {
    OverlapReport rep;
    rep.word = std::move(word);
    rep.first_rule = first;
    rep.second_rule = second;
    rep.second_pos = pos;
    rep.inclusion = inclusion;
    rep.trivial = sys.rules()[first].is_commutation() || sys.rules()[second].is_commutation();
    rep.left_result = apply_at(sys, rep.word, first, 0);
    rep.right_result = apply_at(sys, rep.word, second, pos);
    rep.resolvable = rep.left_result == rep.right_result;
    return rep;
}

}  // namespace

std::vector<OverlapReport> check_confluence(const ReductionSystem& sys) {
    std::vector<OverlapReport> out;
    const auto& rules = sys.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const Word& a = rules[i].lhs;
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& b = rules[j].lhs;
            // overlap: a proper suffix of a equals a proper prefix of b
            for (std::size_t t = 1; t < std::min(a.size(), b.size()); ++t) {
                if (a.subword(a.size() - t) == b.subword(0, t)) {
                    out.push_back(make_report(sys, a * b.subword(t), i, j, a.size() - t, false));
                }
            }
            // inclusion: b occurs inside a
            if (i != j && b.size() <= a.size()) {
                for (auto pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1)) {
                    out.push_back(make_report(sys, a, i, j, pos, true));
                }
            }
        }
    }
    return out;
}

bool all_resolvable(const std::vector<OverlapReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const OverlapReport& r) { return r.resolvable; });
}

Element substitute(const Element& e, const std::vector<Element>& images, const ReductionSystem& target,
                   bool reverse) {
    if (e.alphabet() && images.size() != e.alphabet()->size()) {
        throw std::invalid_argument("substitution needs one image per generator");
    }
    std::unordered_map<Word, Element, WordHash> prefix_images;
    prefix_images.emplace(Word(), Element(target.alphabet(), Scalar(1)));
    std::function<const Element&(const Word&)> image_of = [&](const Word& w) -> const Element& {
        if (auto it = prefix_images.find(w); it != prefix_images.end()) return it->second;
        const Element& head = image_of(w.subword(0, w.size() - 1));
        Element value = normal_form(target, head * images[w[w.size() - 1]]);
        return prefix_images.emplace(w, std::move(value)).first->second;
    };
    Element out(target.alphabet());
    for (const auto& [w, c] : e.terms()) out += c * image_of(reverse ? w.reversed() : w);
    return out;
}

std::vector<Word> irreducible_words(const ReductionSystem& sys, std::size_t max_length) {
    std::vector<Word> out{Word()};
    std::vector<Word> frontier{Word()};
    const auto n = static_cast<Symbol>(sys.alphabet()->size());
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (Symbol s = 0; s < n; ++s) {
                Word candidate = w * Word{s};
                // words containing a reducible prefix are reducible
                if (sys.is_irreducible(candidate)) next.push_back(std::move(candidate));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace ncalg
