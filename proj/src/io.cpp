#include "rccmerge/io.hpp"

#include <sstream>

namespace rccmerge {

namespace {

Json names_json(const auto& names)
{
    Json out = Json::array();
    for (const auto& n : names)
        out.push_back(n.str());
    return out;
}

Json relation_json(Relation r)
{
    Json out = Json::array();
    for (Base b : r.bases())
        out.push_back(to_string(b));
    return out;
}

Json pair_json(const std::string& a, const std::string& b)
{
    return Json::array({a, b});
}

}  // namespace

Json to_json(const Ontology& o)
{
    Json tbox = Json::array();
    for (const auto& ax : o.tbox())
        tbox.push_back(to_string(ax));
    Json abox = Json::array();
    for (const auto& as : o.abox())
        abox.push_back(to_string(as));
    return Json{
        {"tbox", tbox},
        {"abox", abox},
        {"signature",
         {{"concepts", names_json(o.signature().concepts)},
          {"roles", names_json(o.signature().roles)},
          {"individuals", names_json(o.signature().individuals)}}},
    };
}

Json to_json(const ClosedABox& c)
{
    Json facts = Json::array();
    for (const auto& f : c.facts)
        facts.push_back(to_string(Assertion{f}));
    Json roles = Json::array();
    for (const auto& r : c.roles)
        roles.push_back(to_string(Assertion{r}));
    return Json{
        {"facts", facts},
        {"roles", roles},
        {"inconsistent_individuals", names_json(c.inconsistent_individuals)},
    };
}

Json to_json(const Classification& c)
{
    Json subsumptions = Json::array();
    Json disjoint = Json::array();
    for (const auto& ax : c.axioms()) {
        if (const auto* s = std::get_if<Subsumption>(&ax))
            subsumptions.push_back(pair_json(s->sub.str(), s->sup.str()));
        else if (const auto* d = std::get_if<Disjointness>(&ax); d && d->first != d->second)
            disjoint.push_back(pair_json(d->first.str(), d->second.str()));
    }
    return Json{
        {"concepts", names_json(c.concepts())},
        {"subsumptions", subsumptions},
        {"disjoint", disjoint},
        {"unsatisfiable", names_json(c.unsatisfiable_concepts())},
    };
}

Json to_json(const Qcn& n)
{
    Json constraints = Json::array();
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n.at(i, i).is_empty())
            constraints.push_back(
                Json{{"from", n.variable(i)}, {"to", n.variable(i)}, {"rel", Json::array()}});
    for (auto [i, j] : n.canonical_pairs()) {
        Relation r = n.at(i, j);
        if (r.is_full())
            continue;
        constraints.push_back(Json{{"from", n.variable(i)}, {"to", n.variable(j)}, {"rel", relation_json(r)}});
    }
    return Json{{"variables", n.variables()}, {"constraints", constraints}};
}

Qcn qcn_from_json(const Json& j)
{
    try {
        if (!j.is_object() || !j.contains("variables") || !j.at("variables").is_array())
            throw InputError("QCN JSON needs a \"variables\" array");
        Qcn n(j.at("variables").get<std::vector<std::string>>());
        if (!j.contains("constraints"))
            return n;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& c : j.at("constraints")) {
            std::string from = c.at("from").get<std::string>();
            std::string to = c.at("to").get<std::string>();
            auto fi = n.find(from);
            auto ti = n.find(to);
            if (!fi || !ti)
                throw InputError("constraint mentions unknown variable '" + (fi ? to : from) + "'");
            auto key = std::minmax(*fi, *ti);
            if (!seen.insert(key).second)
                throw InputError("constraint between '" + from + "' and '" + to + "' is given twice");
            Relation r = relation_of(c.at("rel").get<std::vector<std::string>>());
            if (*fi == *ti && !r.is_empty() && r != Relation{Base::EQ})
                throw InputError("variable '" + from + "' can only relate to itself by EQ");
            n.set(*fi, *ti, r);
        }
        return n;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed QCN JSON: ") + e.what());
    }
}

Json to_json(const ForwardTranslation& t)
{
    Json conflicts = Json::array();
    for (const auto& [a, b] : t.conflicting_pairs)
        conflicts.push_back(pair_json(a, b));
    Json roles = Json::array();
    for (const auto& ax : t.role_axioms)
        roles.push_back(to_string(ax));
    return Json{
        {"network", to_json(t.network)},
        {"role_axioms", roles},
        {"conflicting_pairs", conflicts},
        {"unsatisfiable", names_json(t.unsatisfiable)},
    };
}

Json to_json(const MergeTrace& t)
{
    Json iterations = Json::array();
    for (std::size_t k = 0; k < t.iterations.size(); ++k) {
        const auto& step = t.iterations[k];
        Json relaxed = Json::array();
        for (const auto& [a, b] : step.relaxed)
            relaxed.push_back(pair_json(a, b));
        iterations.push_back(Json{
            {"iteration", k + 1},
            {"relaxed", relaxed},
            {"val", step.val},
            {"snapshot", to_json(step.snapshot)},
        });
    }
    return Json{{"initial", to_json(t.initial)}, {"iterations", iterations}};
}

Json to_json(const DistanceTable& t)
{
    Json rows = Json::array();
    for (const auto& [a, b] : t.pairs()) {
        Json dist = Json::object();
        for (Base base : all_bases)
            dist[to_string(base)] = t.distance(a, b, base);
        Json profile = Json::array();
        for (Relation r : t.profile(a, b).entries)
            profile.push_back(relation_json(r));
        rows.push_back(Json{{"pair", pair_json(a, b)}, {"profile", profile}, {"distances", dist}});
    }
    return Json{{"variables", t.variables()}, {"sources", t.sources()}, {"pairs", rows}, {"warnings", t.warnings()}};
}

Json to_json(const ScenarioScore& s)
{
    Json sources = Json::array();
    for (const auto& src : s.sources) {
        Json pairs = Json::array();
        for (const auto& pc : src.pairs) {
            pairs.push_back(Json{
                {"pair", pair_json(pc.first, pc.second)},
                {"label", relation_json(pc.label)},
                {"conflicts", pc.conflicts},
                {"counts",
                 {{"inside", pc.counts.count(ConflictForm::Inside)},
                  {"contains", pc.counts.count(ConflictForm::Contains)},
                  {"disjoint", pc.counts.count(ConflictForm::Disjoint)},
                  {"overlap", pc.counts.overlap()}}},
                {"individuals",
                 {{"inside", names_json(pc.counts.inside)},
                  {"contains", names_json(pc.counts.contains)},
                  {"disjoint", names_json(pc.counts.disjoint)}}},
            });
        }
        sources.push_back(Json{{"total", src.total}, {"pairs", pairs}});
    }
    return Json{{"distance", s.distance}, {"sources", sources}};
}

Json scenarios_to_json(const std::vector<Scenario>& candidates, const Selection& selection)
{
    Json list = Json::array();
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        Json entry = to_json(candidates[k].network());
        entry["id"] = k + 1;
        if (k < selection.scores.size())
            entry["score"] = to_json(selection.scores[k]);
        list.push_back(entry);
    }
    Json tied = Json::array();
    for (std::size_t k : selection.tied)
        tied.push_back(k + 1);
    return Json{{"scenarios", list}, {"selected", selection.index + 1}, {"tied", tied}};
}

std::string to_dot(const Qcn& n, const std::string& graph_name)
{
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n";
    for (const auto& v : n.variables())
        out << "  \"" << v << "\";\n";
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n.at(i, i).is_empty())
            out << "  \"" << n.variable(i) << "\" -> \"" << n.variable(i) << "\" [label=\"{}\"];\n";
    for (auto [i, j] : n.canonical_pairs()) {
        Relation r = n.at(i, j);
        if (r.is_full())
            continue;
        out << "  \"" << n.variable(i) << "\" -> \"" << n.variable(j) << "\" [label=\"" << to_string(r)
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace rccmerge
