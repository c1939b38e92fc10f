#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ncalg {

/// One line of the identity corpus: `label | kind | lhs | rhs`.
struct Identity {
    std::string label;
    std::string kind;
    std::string lhs;
    std::string rhs;
    int line = 0;
};

struct IdentityResult {
    Identity identity;
    bool passed = false;
    std::string detail;  // difference in normal form, or the error text
};

/// Parses the corpus format; '#' starts a comment. Throws ParseError.
std::vector<Identity> parse_identities(std::string_view text);
/// The corpus compiled into the library.
std::string_view builtin_identity_text();
std::vector<Identity> builtin_identities();

IdentityResult check_identity(const Identity& id);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Runs acceptance criteria 1..12 (all when `only` is empty).
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});
CriterionResult run_criterion(int id);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const IdentityResult& r);

}  // namespace ncalg
