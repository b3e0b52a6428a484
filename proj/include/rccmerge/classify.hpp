#ifndef RCCMERGE_CLASSIFY_HPP
#define RCCMERGE_CLASSIFY_HPP

#include "rccmerge/ontology.hpp"

#include <map>
#include <set>

namespace rccmerge {

class UnsatisfiableConcept : public std::runtime_error {
public:
    explicit UnsatisfiableConcept(ConceptName c);
    const ConceptName& concept_name() const { return concept_; }

private:
    ConceptName concept_;
};

/// Atomic consequences of a TBox: every entailed A ⊑ B and A ⊓ B ⊑ ⊥ over
/// the named concepts. An unsatisfiable concept is subsumed by everything
/// and disjoint from everything, itself included.
class Classification {
public:
    Classification() = default;

    const std::vector<ConceptName>& concepts() const { return concepts_; }
    bool knows(const ConceptName& c) const { return index_.count(c) != 0; }

    bool subsumes(const ConceptName& sub, const ConceptName& sup) const;
    bool disjoint(const ConceptName& a, const ConceptName& b) const;
    bool unsatisfiable(const ConceptName& c) const;

    std::vector<ConceptName> unsatisfiable_concepts() const;
    /// Named subsumers of c, c itself included, in concept order.
    std::vector<ConceptName> subsumers(const ConceptName& c) const;

    /// The atomic consequences as axioms: A ⊑ B for A ≠ B and every
    /// entailed disjointness (A ⊓ A ⊑ ⊥ marks an unsatisfiable A).
    std::vector<Axiom> axioms() const;

    /// Throws UnsatisfiableConcept for the first unsatisfiable concept.
    void check_satisfiable() const;

private:
    friend Classification classify(const std::vector<Axiom>&, const std::vector<ConceptName>&);

    std::size_t at(const ConceptName& c) const;

    std::vector<ConceptName> concepts_;
    std::map<ConceptName, std::size_t> index_;
    std::vector<std::vector<char>> sub_;   // sub_[a][b]: a ⊑ b
    std::vector<std::vector<char>> disj_;  // disj_[a][b]: a ⊓ b ⊑ ⊥
    std::vector<char> bottom_;
};

/// Runs the EL⊥ completion rules. extra_concepts are classified too even
/// if no axiom mentions them.
Classification classify(const std::vector<Axiom>& tbox, const std::vector<ConceptName>& extra_concepts = {});
Classification classify(const Ontology& o);

/// Materialised ABox: all entailed concept assertions over named individuals.
struct ClosedABox {
    std::set<ConceptAssertion> facts;
    std::set<RoleAssertion> roles;
    /// Individuals that are members of two disjoint concepts (or of an
    /// unsatisfiable one).
    std::set<IndividualName> inconsistent_individuals;

    bool holds(const ConceptName& c, const IndividualName& a) const
    {
        return facts.count(ConceptAssertion{c, a}) != 0;
    }
    /// Individuals known to be members of c.
    std::set<IndividualName> members(const ConceptName& c) const;
    std::set<IndividualName> individuals() const;
};

ClosedABox deductive_closure(const Ontology& o);
ClosedABox deductive_closure(const Ontology& o, const Classification& c);

}  // namespace rccmerge

#endif  // RCCMERGE_CLASSIFY_HPP
