#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/expression.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

enum class PresentationId { Racah, BannaiIto, BannaiItoRebased, Custom };

struct DefinedElement {
    std::string name;     // ASCII
    std::string display;  // optional Unicode spelling
    Element value;        // normal form
};

/// A reduction system together with named elements defined over it.
class Presentation {
public:
    Presentation(PresentationId id, std::string name, std::shared_ptr<const ReductionSystem> system,
                 std::vector<DefinedElement> defined = {});

    PresentationId id() const { return id_; }
    const std::string& name() const { return name_; }
    const ReductionSystem& system() const { return *system_; }
    const AlphabetPtr& alphabet() const { return system_->alphabet(); }
    const std::vector<DefinedElement>& defined() const { return defined_; }

    Element generator(std::string_view name) const { return system_->generator(name); }
    /// Defined element or generator by name.
    Element element(std::string_view name) const;
    Element reduce(const Element& e) const { return normal_form(*system_, e); }
    /// Parses and reduces an expression over this presentation's names.
    Element parse(std::string_view expression) const;
    const NameScope& scope() const { return scope_; }

private:
    PresentationId id_;
    std::string name_;
    std::shared_ptr<const ReductionSystem> system_;
    std::vector<DefinedElement> defined_;
    NameScope scope_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Generators A, B, C, D, alpha, beta; defined gamma, delta, Omega_A/B/C.
PresentationPtr racah();
/// Generators X, Y, Z, kappa, lambda, mu; defined iota, L.
PresentationPtr bannai_ito();
/// Generators X, Y, iota, kappa, lambda, mu; defined Z = iota - X - Y.
PresentationPtr bi_rebased();

/// "racah", "bi" or "bi-rebased" (alias "rebased"); nullptr otherwise.
PresentationPtr presentation_by_name(std::string_view name);
/// User-supplied system text; no defined elements, no confluence requirement.
PresentationPtr presentation_from_text(std::string name, std::string_view system_text);
/// A built-in name, otherwise a path to a system file. Throws std::runtime_error
/// when the file cannot be read.
PresentationPtr load_presentation(std::string_view name_or_path);

/// BI element -> rebased basis via Z := iota - X - Y.
Element rebase_to_iota(const Element& bi_element);
/// Rebased element -> BI basis via iota := X + Y + Z.
Element rebase_from_iota(const Element& rebased_element);

}  // namespace ncalg
