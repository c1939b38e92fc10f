#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncalg/element.hpp"

namespace ncalg {

/// lhs -> rhs. The lhs is a word of length >= 2.
struct Rule {
    Word lhs;
    Element rhs;

    /// True when rhs is a single coefficient-1 word that permutes lhs.
    bool is_commutation() const;
};

/// Monoid order used to certify termination.
///
/// u < w when
///   - weight(u) < weight(w), or
///   - weights are equal and u is shorter, or
///   - weights and lengths are equal and u is obtained from w by a nonempty
///     sequence of elementary operations: swapping two symbols s_i, s_j
///     (i < j) with rank(s_j) < rank(s_i), or replacing a symbol of the
///     descent chain by its left neighbour in the chain.
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(std::vector<unsigned> weights, std::vector<Symbol> descent_chain = {});
    /// Every symbol weighs 1; no descent chain.
    static TermOrder length_order(std::size_t alphabet_size);

    unsigned long weight(const Word& w) const;
    bool less(const Word& u, const Word& w) const;

    const std::vector<unsigned>& weights() const { return weights_; }
    const std::vector<Symbol>& descent_chain() const { return chain_; }

private:
    bool reachable(const Word& from, const Word& to) const;

    std::vector<unsigned> weights_;
    std::vector<Symbol> chain_;
};

struct TerminationViolation {
    std::size_t rule = 0;
    Word rhs_word;
};

struct TerminationReport {
    bool terminates = true;
    std::vector<TerminationViolation> violations;
};

/// Ordered rule set over one alphabet with a termination order. Immutable.
///
/// Construction validates the rules (lhs length, unique lhs, lhs not in the
/// support of its own rhs) and records the termination report; reducing with
/// a system whose rules do not all decrease throws.
class ReductionSystem {
public:
    ReductionSystem(AlphabetPtr alphabet, std::vector<Rule> rules, TermOrder order);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const TermOrder& order() const { return order_; }
    const TerminationReport& termination() const { return termination_; }

    struct Redex {
        std::size_t rule;
        std::size_t pos;
    };
    /// First rule (in declaration order) occurring in w, at its leftmost position.
    std::optional<Redex> find_redex(const Word& w) const;
    bool is_irreducible(const Word& w) const { return !find_redex(w); }

    Element generator(std::string_view name) const { return Element::generator(alphabet_, alphabet_->at(name)); }

private:
    AlphabetPtr alphabet_;
    std::vector<Rule> rules_;
    TermOrder order_;
    TerminationReport termination_;
};

TerminationReport check_termination(const ReductionSystem& sys);

/// Unique irreducible form of e. Requires a terminating system.
Element normal_form(const ReductionSystem& sys, const Element& e);

/// True when every word of e is irreducible.
bool is_normal(const ReductionSystem& sys, const Element& e);

struct OverlapReport {
    Word word;
    std::size_t first_rule = 0;   // applied at position 0
    std::size_t second_rule = 0;  // applied at `second_pos`
    std::size_t second_pos = 0;
    bool inclusion = false;
    /// At least one of the two rules is a plain commutation.
    bool trivial = false;
    Element left_result;
    Element right_result;
    bool resolvable = false;
};

/// One report per overlap and inclusion ambiguity; both sides are reduced to
/// normal form and compared.
std::vector<OverlapReport> check_confluence(const ReductionSystem& sys);

bool all_resolvable(const std::vector<OverlapReport>& reports);

/// Sends each generator s to images[s], multiplicatively (in reversed word
/// order when `reverse`), reducing in `target` after every product.
Element substitute(const Element& e, const std::vector<Element>& images, const ReductionSystem& target,
                   bool reverse = false);

/// Every word of length <= max_length over the alphabet that no rule reduces.
std::vector<Word> irreducible_words(const ReductionSystem& sys, std::size_t max_length);

}  // namespace ncalg
