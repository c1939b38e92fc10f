#include "ncalg/presentations.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ncalg/system_text.hpp"

namespace ncalg {

Presentation::Presentation(PresentationId id, std::string name, std::shared_ptr<const ReductionSystem> system,
                           std::vector<DefinedElement> defined)
    : id_(id), name_(std::move(name)), system_(std::move(system)), defined_(std::move(defined)) {
    scope_.alphabet = system_->alphabet();
    for (const auto& d : defined_) {
        if (scope_.knows(d.name) || (!d.display.empty() && scope_.knows(d.display))) {
            throw std::invalid_argument("defined name '" + d.name + "' is not unique");
        }
        scope_.defined.emplace(d.name, d.value);
        if (!d.display.empty()) scope_.defined.emplace(d.display, d.value);
    }
    auto sys = system_;
    scope_.reduce = [sys](const Element& e) { return normal_form(*sys, e); };
}

Element Presentation::element(std::string_view name) const { return scope_.lookup(name); }

Element Presentation::parse(std::string_view expression) const { return parse_element(expression, scope_); }

namespace {

constexpr std::string_view kRacahSystem = R"(
alphabet A B C D alpha=α beta=β
chain A B C D
B*A -> A*B - 2*D
C*B -> B*C - 2*D
C*A -> A*C + 2*D
D*A -> A*D - A*B + A*C + 2*D - alpha
D*B -> B*D - B*C + A*B - beta
D*C -> C*D - A*C + B*C - 2*D + alpha + beta
alpha*A -> A*alpha
alpha*B -> B*alpha
alpha*C -> C*alpha
alpha*D -> D*alpha
beta*A -> A*beta
beta*B -> B*beta
beta*C -> C*beta
beta*D -> D*beta
beta*alpha -> alpha*beta
)";

constexpr std::string_view kBannaiItoSystem = R"(
alphabet X Y Z kappa=κ lambda=λ mu=μ
Y*X -> -X*Y + Z + kappa
Z*Y -> -Y*Z + X + lambda
Z*X -> -X*Z + Y + mu
kappa*X -> X*kappa
kappa*Y -> Y*kappa
kappa*Z -> Z*kappa
lambda*X -> X*lambda
lambda*Y -> Y*lambda
lambda*Z -> Z*lambda
lambda*kappa -> kappa*lambda
mu*X -> X*mu
mu*Y -> Y*mu
mu*Z -> Z*mu
mu*kappa -> kappa*mu
mu*lambda -> lambda*mu
)";

constexpr std::string_view kRebasedSystem = R"(
alphabet X Y iota=ι kappa=κ lambda=λ mu=μ
weights 1 1 2 0 0 0
Y*X -> -X*Y - X - Y + iota + kappa
iota*Y -> 2*Y^2 - Y*iota - Y + iota + kappa + lambda
iota*X -> 2*X^2 - X*iota - X + iota + kappa + mu
kappa*X -> X*kappa
kappa*Y -> Y*kappa
kappa*iota -> iota*kappa
lambda*X -> X*lambda
lambda*Y -> Y*lambda
lambda*iota -> iota*lambda
lambda*kappa -> kappa*lambda
mu*X -> X*mu
mu*Y -> Y*mu
mu*iota -> iota*mu
mu*kappa -> kappa*mu
mu*lambda -> lambda*mu
)";

struct Definition {
    const char* name;
    const char* display;
    const char* expression;
};

PresentationPtr build(PresentationId id, std::string name, std::string_view system_text,
                      std::initializer_list<Definition> definitions) {
    auto sys = std::make_shared<const ReductionSystem>(parse_system(system_text));
    if (!sys->termination().terminates) throw std::logic_error(name + ": built-in system does not terminate");
    if (!all_resolvable(check_confluence(*sys))) throw std::logic_error(name + ": built-in system is not confluent");
    std::vector<DefinedElement> defined;
    for (const auto& d : definitions) {
        // each definition may refer to the ones before it
        Presentation partial(id, name, sys, defined);
        defined.push_back({d.name, d.display, partial.parse(d.expression)});
    }
    return std::make_shared<const Presentation>(id, std::move(name), sys, std::move(defined));
}

}  // namespace

PresentationPtr racah() {
    static const PresentationPtr p = build(
        PresentationId::Racah, "racah", kRacahSystem,
        {
            {"gamma", "γ", "-alpha - beta"},
            {"delta", "δ", "A + B + C"},
            {"Omega_A", "Ω_A", "D^2 + 1/2*(B*A*C + C*A*B) + A^2 + B*gamma - C*beta - A*delta"},
            {"Omega_B", "Ω_B", "D^2 + 1/2*(C*B*A + A*B*C) + B^2 + C*alpha - A*gamma - B*delta"},
            {"Omega_C", "Ω_C", "D^2 + 1/2*(A*C*B + B*C*A) + C^2 + A*beta - B*alpha - C*delta"},
        });
    return p;
}

PresentationPtr bannai_ito() {
    static const PresentationPtr p = build(PresentationId::BannaiIto, "bi", kBannaiItoSystem,
                                           {
                                               {"iota", "ι", "X + Y + Z"},
                                               {"L", "", "{X, [Z, Y]}"},
                                           });
    return p;
}

PresentationPtr bi_rebased() {
    static const PresentationPtr p =
        build(PresentationId::BannaiItoRebased, "bi-rebased", kRebasedSystem, {{"Z", "", "iota - X - Y"}});
    return p;
}

PresentationPtr presentation_by_name(std::string_view name) {
    if (name == "racah") return racah();
    if (name == "bi" || name == "bannai-ito") return bannai_ito();
    if (name == "bi-rebased" || name == "rebased") return bi_rebased();
    return nullptr;
}

PresentationPtr presentation_from_text(std::string name, std::string_view system_text) {
    auto sys = std::make_shared<const ReductionSystem>(parse_system(system_text));
    return std::make_shared<const Presentation>(PresentationId::Custom, std::move(name), sys);
}

PresentationPtr load_presentation(std::string_view name_or_path) {
    if (auto p = presentation_by_name(name_or_path)) return p;
    std::ifstream in{std::string(name_or_path)};
    if (!in) throw std::runtime_error("unknown algebra '" + std::string(name_or_path) + "' (not a built-in name or readable file)");
    std::stringstream buf;
    buf << in.rdbuf();
    return presentation_from_text(std::string(name_or_path), buf.str());
}

Element rebase_to_iota(const Element& bi_element) {
    const auto& r = *bi_rebased();
    std::vector<Element> images{r.generator("X"), r.generator("Y"), r.element("Z"),
                                r.generator("kappa"), r.generator("lambda"), r.generator("mu")};
    return substitute(bi_element, images, r.system());
}

Element rebase_from_iota(const Element& rebased_element) {
    const auto& b = *bannai_ito();
    std::vector<Element> images{b.generator("X"), b.generator("Y"), b.element("iota"),
                                b.generator("kappa"), b.generator("lambda"), b.generator("mu")};
    return substitute(rebased_element, images, b.system());
}

}  // namespace ncalg
