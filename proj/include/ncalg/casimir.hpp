#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncalg/morphisms.hpp"
#include "ncalg/polynomial.hpp"

namespace ncalg {

/// Polynomial in (iota, kappa, lambda, mu).
using CentralPolynomial = CommPolynomial<4>;
inline const std::array<std::string, 4> kCentralNames{"iota", "kappa", "lambda", "mu"};

/// Member of the Casimir class: base representative plus correction(α, β, γ, δ).
struct CasimirSpec {
    CommPolynomial<4> correction;
};
inline const std::array<std::string, 4> kCorrectionNames{"alpha", "beta", "gamma", "delta"};

class NotInCentralizerImage : public std::runtime_error {
public:
    NotInCentralizerImage(const std::string& what, std::vector<std::string> offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}
    /// Rebased monomials with a nonzero X or Y exponent.
    const std::vector<std::string>& offending() const { return offending_; }

private:
    std::vector<std::string> offending_;
};

/// nf([e, t]) == 0 for every tester; the generators when `testers` is empty.
bool is_central(const Presentation& p, const Element& e, const std::vector<Element>& testers = {});

/// D^2 + A^2 + B^2 + ((δ+2){A,B} - {A^2,B} - {A,B^2})/2 + A(β-δ) - B(δ+α), reduced.
Element casimir_base();
/// Base representative plus the expanded correction, in Racah normal form.
Element casimir_element(const CasimirSpec& spec);
/// Expands a polynomial in (α, β, γ, δ) inside the Racah algebra.
Element expand_correction(const CommPolynomial<4>& q);

/// Finds the correction with omega = casimir_element(spec), written in
/// α, β, δ only (γ = -α - β). Empty when omega is not in the Casimir class.
std::optional<CasimirSpec> solve_casimir_spec(const Element& omega);

/// Writes zeta(omega) as P(iota, kappa, lambda, mu). Throws
/// NotInCentralizerImage when a rebased monomial still carries X or Y.
CentralPolynomial express_casimir(const Element& omega);

/// P(iota, kappa, lambda, mu) in the rebased basis.
Element central_in_rebased(const CentralPolynomial& p);
/// P(iota, kappa, lambda, mu) in the BI basis, iota = X + Y + Z.
Element central_in_bi(const CentralPolynomial& p);

/// Q(α, β, γ, δ) rewritten through the images of α, β, γ, δ under zeta.
CentralPolynomial correction_in_central(const CommPolynomial<4>& q);

struct RankEntry {
    std::array<unsigned, 6> exponents{};  // (i, j, k, l, r, s) of A^i B^j C^k D^l α^r β^s
    std::string top_monomial;
    Scalar expected;
    Scalar computed;
    bool matches = false;
};

struct ZetaRankReport {
    int max_weight = 0;
    std::size_t dimension_source = 0;
    std::size_t dimension_image = 0;  // rank of the coefficient matrix
    bool full_rank = false;
    bool leading_map_injective = false;
    bool top_coefficients_match = false;
    std::vector<RankEntry> entries;

    bool passed() const { return full_rank && leading_map_injective && top_coefficients_match; }
    nlohmann::json to_json() const;
};

/// Truncated injectivity check for zeta over Racah basis monomials with
/// 8i + 8j + 12k + 14l + 18r + 18s <= max_weight.
ZetaRankReport zeta_rank_check(int max_weight = 40);

/// Rank of a list of elements as vectors over Q (fraction-free elimination).
std::size_t rank_of(const std::vector<Element>& rows);

}  // namespace ncalg
