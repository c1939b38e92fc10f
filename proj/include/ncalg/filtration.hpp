#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace ncalg {

class NotIrreducible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nonnegative weight per generator, in alphabet order. For the Bannai-Ito
/// algebra the order is (X, Y, Z, kappa, lambda, mu).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<unsigned> weights) : weights_(std::move(weights)) {}
    /// "4,4,6,8,9,9"
    static WeightVector parse(std::string_view text);

    std::size_t size() const { return weights_.size(); }
    unsigned operator[](std::size_t i) const { return weights_.at(i); }
    const std::vector<unsigned>& values() const { return weights_; }
    unsigned long of(const Word& w) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<unsigned> weights_;
};

/// The subspaces spanned by BI basis monomials of weighted degree <= n form
/// an N-filtration iff
///   max(wZ, wκ) <= wX + wY,  max(wX, wλ) <= wY + wZ,  max(wY, wμ) <= wZ + wX.
bool is_filtration(const WeightVector& w);

/// No rule of `sys` raises the weight: every rhs word weighs at most its lhs.
bool rules_respect_weights(const ReductionSystem& sys, const WeightVector& w);

/// Largest weighted degree among the terms of e; -1 for zero. Throws
/// NotIrreducible when e is not in normal form for `sys`.
long weighted_degree(const ReductionSystem& sys, const WeightVector& w, const Element& e);
/// Same, without the normal-form check.
long weighted_degree(const WeightVector& w, const Element& e);

/// Drops every term of weighted degree <= n - 1.
Element leading_form(const WeightVector& w, const Element& e, long n);

struct ProductWitness {
    Word left;
    Word right;
    Element product;
    long bound = 0;
    long degree = 0;
};

struct ProductCheck {
    bool holds = true;
    std::size_t pairs_checked = 0;
    std::optional<ProductWitness> witness;
};

/// Checks weighted_degree(nf(u v)) <= deg(u) + deg(v) for all pairs of
/// irreducible ordered monomials u, v with degree <= sample_degree and
/// length <= max_length. Stops at the first failing pair.
ProductCheck check_filtration_product(const ReductionSystem& sys, const WeightVector& w, long sample_degree,
                                      std::size_t max_length = 4);

/// Ordered monomials (nondecreasing rank) of length <= max_length and
/// weighted degree <= max_degree.
std::vector<Word> ordered_monomials(std::size_t alphabet_size, const WeightVector& w, long max_degree,
                                    std::size_t max_length);

}  // namespace ncalg
