#include "rccmerge/select.hpp"

#include <algorithm>
#include <stdexcept>

namespace rccmerge {

const char* to_string(ConflictForm f)
{
    switch (f) {
    case ConflictForm::Inside: return "inside";
    case ConflictForm::Contains: return "contains";
    case ConflictForm::Disjoint: return "disjoint";
    case ConflictForm::Overlap: return "overlap";
    }
    return "?";
}

ConflictForm conflict_form(Relation r)
{
    if (!is_scenario_label(r))
        throw std::invalid_argument("relation " + to_string(r) + " is not a scenario label");
    if (r == Relation{Base::DR})
        return ConflictForm::Disjoint;
    if (r == Relation{Base::PO})
        return ConflictForm::Overlap;
    if (r.subset_of(Relation{Base::PP, Base::EQ}))
        return ConflictForm::Inside;
    return ConflictForm::Contains;
}

int ConflictCounts::overlap() const
{
    int a = static_cast<int>(inside.size());
    int b = static_cast<int>(contains.size());
    int c = static_cast<int>(disjoint.size());
    return std::max({a, b, c}) - std::min({a, b, c});
}

int ConflictCounts::count(ConflictForm f) const
{
    switch (f) {
    case ConflictForm::Inside: return static_cast<int>(inside.size());
    case ConflictForm::Contains: return static_cast<int>(contains.size());
    case ConflictForm::Disjoint: return static_cast<int>(disjoint.size());
    case ConflictForm::Overlap: return overlap();
    }
    return 0;
}

ConflictCounts conflict_counts(const ClosedABox& closed, const ConceptName& c, const ConceptName& d)
{
    ConflictCounts out;
    std::set<IndividualName> in_c = closed.members(c);
    std::set<IndividualName> in_d = closed.members(d);
    for (const auto& p : in_c) {
        if (in_d.count(p))
            out.disjoint.insert(p);
        else
            out.inside.insert(p);
    }
    for (const auto& p : in_d)
        if (!in_c.count(p))
            out.contains.insert(p);
    return out;
}

int nb_conflicts(const ClosedABox& closed, const ConceptName& c, const ConceptName& d, Relation label)
{
    ConflictForm f = conflict_form(label);
    return conflict_counts(closed, c, d).count(f);
}

int nb_conflicts(const Ontology& o, const ConceptName& c, const ConceptName& d, Relation label)
{
    return nb_conflicts(deductive_closure(o), c, d, label);
}

ScenarioScore score_scenario(const Scenario& s, const std::vector<Ontology>& profile,
                             const std::vector<ClosedABox>& closed)
{
    if (closed.size() != profile.size())
        throw std::invalid_argument("one closed ABox per source is required");
    const Qcn& net = s.network();
    for (std::size_t k = 0; k < profile.size(); ++k)
        for (const auto& c : profile[k].concepts())
            if (!net.find(c.str()))
                throw std::invalid_argument("source " + std::to_string(k + 1) + " uses concept '" + c.str()
                                            + "' which is not a variable of the scenario");

    ScenarioScore score;
    for (std::size_t k = 0; k < profile.size(); ++k) {
        SourceConflicts src;
        for (auto [i, j] : net.canonical_pairs()) {
            PairConflict pc;
            pc.first = net.variable(i);
            pc.second = net.variable(j);
            pc.label = net.at(i, j);
            pc.counts = conflict_counts(closed[k], ConceptName{pc.first}, ConceptName{pc.second});
            pc.conflicts = pc.counts.count(conflict_form(pc.label));
            src.total += pc.conflicts;
            src.pairs.push_back(std::move(pc));
        }
        score.distance += src.total;
        score.sources.push_back(std::move(src));
    }
    return score;
}

ScenarioScore score_scenario(const Scenario& s, const std::vector<Ontology>& profile)
{
    std::vector<ClosedABox> closed;
    for (const auto& o : profile)
        closed.push_back(deductive_closure(o));
    return score_scenario(s, profile, closed);
}

int scenario_distance(const Scenario& s, const std::vector<Ontology>& profile)
{
    return score_scenario(s, profile).distance;
}

Selection select_scenario(const std::vector<Scenario>& candidates, const std::vector<Ontology>& profile)
{
    if (candidates.empty())
        throw std::invalid_argument("no candidate scenarios to select from");
    std::vector<ClosedABox> closed;
    for (const auto& o : profile)
        closed.push_back(deductive_closure(o));

    Selection sel;
    for (const auto& s : candidates)
        sel.scores.push_back(score_scenario(s, profile, closed));

    int best = sel.scores.front().distance;
    for (const auto& sc : sel.scores)
        best = std::min(best, sc.distance);
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (sel.scores[k].distance == best)
            sel.tied.push_back(k);
    sel.index = sel.tied.front();
    for (std::size_t k : sel.tied)
        if (candidates[k].canonical_labels() < candidates[sel.index].canonical_labels())
            sel.index = k;
    return sel;
}

}  // namespace rccmerge
