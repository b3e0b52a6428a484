#ifndef RCCMERGE_SELECT_HPP
#define RCCMERGE_SELECT_HPP

#include "rccmerge/classify.hpp"
#include "rccmerge/scenarios.hpp"

#include <set>

namespace rccmerge {

/// How a scenario label is checked against an ABox.
enum class ConflictForm {
    Inside,    // label within {PP,EQ}: members of C outside D conflict
    Contains,  // label within {PPi,EQ}: members of D outside C conflict
    Disjoint,  // {DR}: members of both conflict
    Overlap,   // {PO}: imbalance between the three counts above
};

const char* to_string(ConflictForm f);
/// Throws std::invalid_argument if r is not a scenario label.
ConflictForm conflict_form(Relation r);

/// Conflicting individuals of one source for the pair (C, D).
struct ConflictCounts {
    std::set<IndividualName> inside;    // C(p) and not D(p)
    std::set<IndividualName> contains;  // D(p) and not C(p)
    std::set<IndividualName> disjoint;  // C(p) and D(p)

    int overlap() const;
    int count(ConflictForm f) const;
};

ConflictCounts conflict_counts(const ClosedABox& closed, const ConceptName& c, const ConceptName& d);

/// Number of individuals of the closed ABox raising a conflict with the
/// label on (c, d). Throws std::invalid_argument for a non-scenario label.
int nb_conflicts(const ClosedABox& closed, const ConceptName& c, const ConceptName& d, Relation label);
int nb_conflicts(const Ontology& o, const ConceptName& c, const ConceptName& d, Relation label);

struct PairConflict {
    std::string first, second;  // canonical orientation
    Relation label;
    ConflictCounts counts;
    int conflicts = 0;  // counts.count(conflict_form(label))
};

struct SourceConflicts {
    int total = 0;
    std::vector<PairConflict> pairs;
};

struct ScenarioScore {
    int distance = 0;
    std::vector<SourceConflicts> sources;
};

/// Per-source, per-pair conflict breakdown. Throws std::invalid_argument if
/// a source uses a concept that is not a variable of the scenario, or if
/// the closed ABoxes do not match the sources.
ScenarioScore score_scenario(const Scenario& s, const std::vector<Ontology>& profile,
                             const std::vector<ClosedABox>& closed);
ScenarioScore score_scenario(const Scenario& s, const std::vector<Ontology>& profile);
int scenario_distance(const Scenario& s, const std::vector<Ontology>& profile);

struct Selection {
    std::size_t index = 0;  // into the candidate list
    std::vector<ScenarioScore> scores;
    /// Candidates sharing the minimal distance, the selected one included.
    std::vector<std::size_t> tied;
    bool tie() const { return tied.size() > 1; }
};

/// Minimal distance wins; ties go to the lexicographically smallest
/// canonical labels. Throws std::invalid_argument on an empty list.
Selection select_scenario(const std::vector<Scenario>& candidates, const std::vector<Ontology>& profile);

}  // namespace rccmerge

#endif  // RCCMERGE_SELECT_HPP
