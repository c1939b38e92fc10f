#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncalg/presentations.hpp"

namespace ncalg {

enum class MapKind { Homomorphism, Antihomomorphism };

class UnsealedMap : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct RelationCounterexample {
    std::size_t rule = 0;
    std::string rule_text;
    Element defect;  // nf(f(lhs) - f(rhs)) in the target
};

struct RelationCheck {
    bool holds = true;
    std::vector<RelationCounterexample> counterexamples;
};

/// Algebra map between two presentations, given by generator images.
///
/// A map starts unsealed; seal() runs verify_on_relations and only a sealed
/// map can be applied. Defined elements map by expansion, so only generator
/// images are stored.
class AlgebraMap {
public:
    AlgebraMap(std::string name, PresentationPtr source, PresentationPtr target, std::vector<Element> images,
               MapKind kind);

    const std::string& name() const { return name_; }
    const PresentationPtr& source() const { return source_; }
    const PresentationPtr& target() const { return target_; }
    MapKind kind() const { return kind_; }
    const std::vector<Element>& images() const { return images_; }
    const Element& image(std::string_view generator) const;
    bool sealed() const { return sealed_; }

    /// f(lhs) - f(rhs) reduces to zero in the target for every source rule.
    RelationCheck verify_on_relations() const;
    /// Seals when verification passes; returns the verification either way.
    RelationCheck seal();

    Element apply(const Element& e) const;
    /// Parses `expression` over the source presentation and applies the map.
    Element apply(std::string_view expression) const;

private:
    Element apply_unchecked(const Element& e) const;

    std::string name_;
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<Element> images_;
    MapKind kind_;
    bool sealed_ = false;
};

/// Builds and seals a map; throws std::invalid_argument on a failed check.
AlgebraMap make_sealed_map(std::string name, PresentationPtr source, PresentationPtr target,
                           const std::vector<std::string>& image_expressions, MapKind kind);

/// f ∘ g: apply g first. Requires g.target == f.source; anti ∘ anti = homo.
AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g);
AlgebraMap identity_map(PresentationPtr p);

/// Same endpoints, kind and generator images.
bool same_action(const AlgebraMap& f, const AlgebraMap& g);

/// The embedding of the Racah algebra into the Bannai-Ito algebra.
const AlgebraMap& zeta();
/// D6 generators acting on the Racah algebra ("racah") or on BI ("bi").
const AlgebraMap& sigma_on(std::string_view algebra);
const AlgebraMap& tau_on(std::string_view algebra);

/// Element of the dihedral group of order 12, written tau^rotation sigma^reflection.
class D6Element {
public:
    enum class Generator { Sigma, Tau };

    D6Element() = default;
    static D6Element sigma() { return D6Element(0, true); }
    static D6Element tau() { return D6Element(1, false); }
    /// Product g1 g2 ... gn, reduced with sigma^2 = tau^6 = (sigma tau)^2 = 1.
    static D6Element from_word(const std::vector<Generator>& word);
    /// Parses a word such as "sigma tau tau" (also "s", "t", "1").
    static D6Element parse(std::string_view text);

    int rotation() const { return rotation_; }
    bool reflection() const { return reflection_; }
    bool is_identity() const { return rotation_ == 0 && !reflection_; }

    friend D6Element operator*(const D6Element& a, const D6Element& b);
    friend bool operator==(const D6Element&, const D6Element&) = default;

    /// Realizes the element as an algebra map built from sigma and tau.
    AlgebraMap act(const AlgebraMap& sigma, const AlgebraMap& tau) const;

private:
    D6Element(int rotation, bool reflection) : rotation_(((rotation % 6) + 6) % 6), reflection_(reflection) {}

    int rotation_ = 0;
    bool reflection_ = false;
};

struct D6RelationReport {
    bool sigma_squared = false;
    bool tau_sixth = false;
    bool sigma_tau_squared = false;
    bool holds() const { return sigma_squared && tau_sixth && sigma_tau_squared; }
};

/// Checks sigma^2 = tau^6 = (sigma tau)^2 = id on generators.
D6RelationReport check_d6_relations(const AlgebraMap& sigma, const AlgebraMap& tau);

/// g_BI(zeta(u)) == zeta(g_R(u)) for every Racah generator u.
bool check_equivariance(const AlgebraMap& zeta_map, const D6Element& g);

}  // namespace ncalg
