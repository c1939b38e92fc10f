#include "ncalg/morphisms.hpp"

#include <sstream>

namespace ncalg {

AlgebraMap::AlgebraMap(std::string name, PresentationPtr source, PresentationPtr target, std::vector<Element> images,
                       MapKind kind)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), kind_(kind) {
    if (!source_ || !target_) throw std::invalid_argument("algebra map needs a source and a target");
    if (images.size() != source_->alphabet()->size()) {
        throw std::invalid_argument(name_ + ": expected one image per source generator");
    }
    for (auto& img : images) images_.push_back(target_->reduce(img));
}

const Element& AlgebraMap::image(std::string_view generator) const {
    return images_.at(source_->alphabet()->at(generator));
}

Element AlgebraMap::apply_unchecked(const Element& e) const {
    if (e.alphabet() && !e.alphabet()->same_as(*source_->alphabet())) {
        throw AlphabetMismatch(name_ + ": element is not over the source alphabet");
    }
    return substitute(e, images_, target_->system(), kind_ == MapKind::Antihomomorphism);
}

Element AlgebraMap::apply(const Element& e) const {
    if (!sealed_) throw UnsealedMap(name_ + ": map has not been verified on the source relations");
    return apply_unchecked(e);
}

Element AlgebraMap::apply(std::string_view expression) const { return apply(source_->parse(expression)); }

RelationCheck AlgebraMap::verify_on_relations() const {
    RelationCheck check;
    const auto& sys = source_->system();
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
        const Rule& r = sys.rules()[i];
        Element lhs = Element::monomial(sys.alphabet(), r.lhs);
        Element defect = apply_unchecked(lhs) - apply_unchecked(r.rhs);
        if (!defect.is_zero()) {
            check.holds = false;
            check.counterexamples.push_back(
                {i, word_to_text(*sys.alphabet(), r.lhs) + " -> " + r.rhs.to_text(), std::move(defect)});
        }
    }
    return check;
}

RelationCheck AlgebraMap::seal() {
    RelationCheck check = verify_on_relations();
    sealed_ = check.holds;
    return check;
}

AlgebraMap make_sealed_map(std::string name, PresentationPtr source, PresentationPtr target,
                           const std::vector<std::string>& image_expressions, MapKind kind) {
    std::vector<Element> images;
    for (const auto& expr : image_expressions) images.push_back(target->parse(expr));
    AlgebraMap map(std::move(name), std::move(source), std::move(target), std::move(images), kind);
    RelationCheck check = map.seal();
    if (!check.holds) {
        throw std::invalid_argument(map.name() + ": images violate relation " + check.counterexamples.front().rule_text);
    }
    return map;
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
    if (!g.target()->alphabet()->same_as(*f.source()->alphabet())) {
        throw std::invalid_argument("cannot compose " + f.name() + " after " + g.name() + ": target/source differ");
    }
    if (!f.sealed() || !g.sealed()) throw UnsealedMap("compose needs sealed maps");
    std::vector<Element> images;
    for (const auto& img : g.images()) images.push_back(f.apply(img));
    MapKind kind = f.kind() == g.kind() ? MapKind::Homomorphism : MapKind::Antihomomorphism;
    AlgebraMap out(f.name() + "*" + g.name(), g.source(), f.target(), std::move(images), kind);
    out.seal();
    return out;
}

AlgebraMap identity_map(PresentationPtr p) {
    std::vector<Element> images;
    for (const auto& g : p->alphabet()->symbols()) images.push_back(Element::generator(p->alphabet(), g.rank));
    AlgebraMap out("id", p, p, std::move(images), MapKind::Homomorphism);
    out.seal();
    return out;
}

bool same_action(const AlgebraMap& f, const AlgebraMap& g) {
    return f.source()->alphabet()->same_as(*g.source()->alphabet()) &&
           f.target()->alphabet()->same_as(*g.target()->alphabet()) && f.kind() == g.kind() &&
           f.images() == g.images();
}

const AlgebraMap& zeta() {
    static const AlgebraMap map = make_sealed_map(
        "zeta", racah(), bannai_ito(),
        {
            "1/16*(2*X - 3)*(2*X + 1)",
            "1/16*(2*Y - 3)*(2*Y + 1)",
            "1/16*(2*Z - 3)*(2*Z + 1)",
            // D = [A, B]/2
            "1/2*[1/16*(2*X - 3)*(2*X + 1), 1/16*(2*Y - 3)*(2*Y + 1)]",
            "1/64*(2*iota - kappa - mu - 3)*(kappa - mu)",
            "1/64*(2*iota - lambda - kappa - 3)*(lambda - kappa)",
        },
        MapKind::Homomorphism);
    return map;
}

const AlgebraMap& sigma_on(std::string_view algebra) {
    static const AlgebraMap on_racah = make_sealed_map("sigma", racah(), racah(),
                                                       {"B", "A", "C", "D", "-beta", "-alpha"},
                                                       MapKind::Antihomomorphism);
    static const AlgebraMap on_bi = make_sealed_map("sigma", bannai_ito(), bannai_ito(),
                                                    {"Y", "X", "Z", "kappa", "mu", "lambda"},
                                                    MapKind::Antihomomorphism);
    if (algebra == "racah") return on_racah;
    if (algebra == "bi") return on_bi;
    throw std::invalid_argument("no D6 action on '" + std::string(algebra) + "'");
}

const AlgebraMap& tau_on(std::string_view algebra) {
    static const AlgebraMap on_racah = make_sealed_map("tau", racah(), racah(),
                                                       {"B", "C", "A", "-D", "beta", "gamma"},
                                                       MapKind::Antihomomorphism);
    static const AlgebraMap on_bi = make_sealed_map("tau", bannai_ito(), bannai_ito(),
                                                    {"Y", "Z", "X", "lambda", "mu", "kappa"},
                                                    MapKind::Antihomomorphism);
    if (algebra == "racah") return on_racah;
    if (algebra == "bi") return on_bi;
    throw std::invalid_argument("no D6 action on '" + std::string(algebra) + "'");
}

D6Element operator*(const D6Element& a, const D6Element& b) {
    // sigma tau^k = tau^-k sigma
    int rotation = a.rotation_ + (a.reflection_ ? -b.rotation_ : b.rotation_);
    return D6Element(rotation, a.reflection_ != b.reflection_);
}

D6Element D6Element::from_word(const std::vector<Generator>& word) {
    D6Element g;
    for (Generator x : word) g = g * (x == Generator::Sigma ? sigma() : tau());
    return g;
}

D6Element D6Element::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Generator> word;
    for (std::string tok; in >> tok;) {
        if (tok == "sigma" || tok == "s" || tok == "σ") {
            word.push_back(Generator::Sigma);
        } else if (tok == "tau" || tok == "t" || tok == "τ") {
            word.push_back(Generator::Tau);
        } else if (tok != "1") {
            throw std::invalid_argument("unknown D6 generator '" + tok + "'");
        }
    }
    return from_word(word);
}

AlgebraMap D6Element::act(const AlgebraMap& sigma, const AlgebraMap& tau) const {
    AlgebraMap out = reflection_ ? sigma : identity_map(sigma.source());
    for (int i = 0; i < rotation_; ++i) out = compose(tau, out);
    return out;
}

D6RelationReport check_d6_relations(const AlgebraMap& sigma, const AlgebraMap& tau) {
    const AlgebraMap id = identity_map(sigma.source());
    D6RelationReport report;
    report.sigma_squared = same_action(compose(sigma, sigma), id);
    AlgebraMap t6 = tau;
    for (int i = 1; i < 6; ++i) t6 = compose(tau, t6);
    report.tau_sixth = same_action(t6, id);
    AlgebraMap st = compose(sigma, tau);
    report.sigma_tau_squared = same_action(compose(st, st), id);
    return report;
}

bool check_equivariance(const AlgebraMap& zeta_map, const D6Element& g) {
    AlgebraMap on_source = g.act(sigma_on("racah"), tau_on("racah"));
    AlgebraMap on_target = g.act(sigma_on("bi"), tau_on("bi"));
    for (const auto& gen : zeta_map.source()->alphabet()->symbols()) {
        Element u = Element::generator(zeta_map.source()->alphabet(), gen.rank);
        if (on_target.apply(zeta_map.apply(u)) != zeta_map.apply(on_source.apply(u))) return false;
    }
    return true;
}

}  // namespace ncalg
