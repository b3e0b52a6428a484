#ifndef RCCMERGE_TRANSLATE_HPP
#define RCCMERGE_TRANSLATE_HPP

#include "rccmerge/classify.hpp"
#include "rccmerge/qcn.hpp"
#include "rccmerge/scenarios.hpp"
#include "rccmerge/semantics.hpp"

#include <map>
#include <set>

namespace rccmerge {

enum class ForwardMode {
    /// Each written A ⊑ B / A ⊓ B ⊑ ⊥ becomes one constraint; role axioms
    /// add only the atomic consequences that need them.
    Axioms,
    /// Every entailed atomic subsumption and disjointness becomes a constraint.
    Closure,
};

const char* to_string(ForwardMode m);
/// "axioms" or "closure"; throws std::invalid_argument otherwise.
ForwardMode parse_forward_mode(std::string_view s);

struct ForwardTranslation {
    Qcn network;
    /// Axioms that have no constraint of their own.
    std::vector<Axiom> role_axioms;
    /// Canonical pairs whose constraints intersected to the empty relation.
    std::vector<std::pair<std::string, std::string>> conflicting_pairs;
    /// Concepts forced empty; their diagonal is the empty relation.
    std::vector<ConceptName> unsatisfiable;
};

/// One variable per concept. With a vocabulary, the variables are exactly
/// the vocabulary in its order, which must include every concept of o.
ForwardTranslation forward(const Ontology& o, ForwardMode mode = ForwardMode::Axioms,
                           const std::vector<ConceptName>& vocabulary = {});

/// Deterministic source of names that are new with respect to a reserved set.
class FreshNamePool {
public:
    FreshNamePool() = default;
    explicit FreshNamePool(const Signature& reserved);

    void reserve(const std::string& name);
    void reserve(const Signature& s);

    /// stem followed by the next free number for that stem, starting at 1.
    ConceptName concept_name(const std::string& stem);
    /// x_1, x_2, ... shared by all stems.
    IndividualName individual();

private:
    std::set<std::string> used_;
    std::map<std::string, int> next_;
    int next_individual_ = 1;
};

/// Ontology whose fulfilling models are exactly the inflations of the
/// solutions of s. Pairs are visited in canonical order.
Ontology backward(const Scenario& s, FreshNamePool& pool);
/// Uses a pool reserving the scenario's variable names.
Ontology backward(const Scenario& s);

/// Concept extensions as regions. Throws std::invalid_argument if one of
/// the variables has an empty extension.
SetInterpretation flatten(const DlInterpretation& i, const std::vector<std::string>& variables);

/// Concepts take their regions; every individual of the signature is
/// mapped to point 0 and roles are empty.
DlInterpretation inflate(const SetInterpretation& s, const std::vector<std::string>& variables,
                         const Signature& signature = {});

}  // namespace rccmerge

#endif  // RCCMERGE_TRANSLATE_HPP
