#include "rccmerge/classify.hpp"

#include <deque>

namespace rccmerge {

UnsatisfiableConcept::UnsatisfiableConcept(ConceptName c)
    : std::runtime_error("concept '" + c.str() + "' is unsatisfiable")
    , concept_(std::move(c))
{
}

std::size_t Classification::at(const ConceptName& c) const
{
    auto it = index_.find(c);
    if (it == index_.end())
        throw std::out_of_range("concept '" + c.str() + "' is not classified");
    return it->second;
}

bool Classification::subsumes(const ConceptName& sub, const ConceptName& sup) const
{
    return sub_[at(sub)][at(sup)] != 0;
}

bool Classification::disjoint(const ConceptName& a, const ConceptName& b) const
{
    return disj_[at(a)][at(b)] != 0;
}

bool Classification::unsatisfiable(const ConceptName& c) const
{
    return bottom_[at(c)] != 0;
}

std::vector<ConceptName> Classification::unsatisfiable_concepts() const
{
    std::vector<ConceptName> out;
    for (std::size_t i = 0; i < concepts_.size(); ++i)
        if (bottom_[i])
            out.push_back(concepts_[i]);
    return out;
}

std::vector<ConceptName> Classification::subsumers(const ConceptName& c) const
{
    std::size_t i = at(c);
    std::vector<ConceptName> out;
    for (std::size_t j = 0; j < concepts_.size(); ++j)
        if (sub_[i][j])
            out.push_back(concepts_[j]);
    return out;
}

std::vector<Axiom> Classification::axioms() const
{
    std::vector<Axiom> out;
    const std::size_t n = concepts_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && sub_[i][j])
                out.push_back(Subsumption{concepts_[i], concepts_[j]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (disj_[i][j])
                out.push_back(make_disjointness(concepts_[i], concepts_[j]));
    return out;
}

void Classification::check_satisfiable() const
{
    for (std::size_t i = 0; i < concepts_.size(); ++i)
        if (bottom_[i])
            throw UnsatisfiableConcept(concepts_[i]);
}

namespace {

struct Edge {
    std::size_t role;
    std::size_t target;
    bool operator<(const Edge& o) const { return std::tie(role, target) < std::tie(o.role, o.target); }
};

}  // namespace

Classification classify(const std::vector<Axiom>& tbox, const std::vector<ConceptName>& extra_concepts)
{
    Classification c;
    auto add_concept = [&](const ConceptName& name) {
        if (c.index_.emplace(name, c.concepts_.size()).second)
            c.concepts_.push_back(name);
        return c.index_[name];
    };
    std::map<RoleName, std::size_t> roles;
    auto add_role = [&](const RoleName& r) { return roles.emplace(r, roles.size()).first->second; };

    for (const auto& name : extra_concepts)
        add_concept(name);

    struct Raw {
        std::vector<std::pair<std::size_t, std::size_t>> sub, disj;
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> right, left;  // (A, r, B) / (r, A, B)
    } raw;
    for (const auto& ax : tbox) {
        std::visit(
            [&](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, Subsumption>) {
                    raw.sub.emplace_back(add_concept(a.sub), add_concept(a.sup));
                } else if constexpr (std::is_same_v<T, Disjointness>) {
                    raw.disj.emplace_back(add_concept(a.first), add_concept(a.second));
                } else if constexpr (std::is_same_v<T, ExistsRight>) {
                    std::size_t s = add_concept(a.sub);
                    raw.right.emplace_back(s, add_role(a.role), add_concept(a.filler));
                } else {
                    std::size_t r = add_role(a.role);
                    std::size_t f = add_concept(a.filler);
                    raw.left.emplace_back(r, f, add_concept(a.sup));
                }
            },
            ax);
    }

    const std::size_t n = c.concepts_.size();
    std::vector<std::vector<std::size_t>> told(n), disj_with(n);
    std::vector<std::vector<Edge>> exists(n);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> exists_left;  // (r, A) -> B
    for (auto [a, b] : raw.sub)
        told[a].push_back(b);
    for (auto [a, b] : raw.disj) {
        disj_with[a].push_back(b);
        disj_with[b].push_back(a);
    }
    for (auto [a, r, b] : raw.right)
        exists[a].push_back(Edge{r, b});
    for (auto [r, a, b] : raw.left)
        exists_left[{r, a}].push_back(b);

    std::vector<std::vector<char>> in_s(n, std::vector<char>(n, 0));
    std::vector<std::vector<std::size_t>> s_list(n);
    std::vector<char> bottom(n, 0);
    std::vector<std::set<Edge>> edges(n);
    for (std::size_t x = 0; x < n; ++x) {
        in_s[x][x] = 1;
        s_list[x].push_back(x);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            auto add = [&](std::size_t b) {
                if (!in_s[x][b]) {
                    in_s[x][b] = 1;
                    s_list[x].push_back(b);
                    changed = true;
                }
            };
            for (std::size_t k = 0; k < s_list[x].size(); ++k) {
                std::size_t a = s_list[x][k];
                for (std::size_t b : told[a])
                    add(b);
                for (std::size_t b : disj_with[a])
                    if (in_s[x][b] && !bottom[x]) {
                        bottom[x] = 1;
                        changed = true;
                    }
                for (const Edge& e : exists[a])
                    if (edges[x].insert(e).second)
                        changed = true;
            }
            for (const Edge& e : edges[x]) {
                if (bottom[e.target] && !bottom[x]) {
                    bottom[x] = 1;
                    changed = true;
                }
                for (std::size_t k = 0; k < s_list[e.target].size(); ++k) {
                    auto it = exists_left.find({e.role, s_list[e.target][k]});
                    if (it != exists_left.end())
                        for (std::size_t b : it->second)
                            add(b);
                }
            }
        }
    }

    c.bottom_ = bottom;
    c.sub_.assign(n, std::vector<char>(n, 0));
    c.disj_.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            c.sub_[a][b] = (bottom[a] || in_s[a][b]) ? 1 : 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool d = bottom[a] || bottom[b];
            for (std::size_t x : s_list[a]) {
                if (d)
                    break;
                for (std::size_t y : disj_with[x])
                    if (in_s[b][y]) {
                        d = true;
                        break;
                    }
            }
            c.disj_[a][b] = d ? 1 : 0;
        }
    }
    return c;
}

Classification classify(const Ontology& o)
{
    return classify(o.tbox(), o.concepts());
}

std::set<IndividualName> ClosedABox::members(const ConceptName& c) const
{
    std::set<IndividualName> out;
    for (const auto& f : facts)
        if (f.concept_name == c)
            out.insert(f.individual);
    return out;
}

std::set<IndividualName> ClosedABox::individuals() const
{
    std::set<IndividualName> out;
    for (const auto& f : facts)
        out.insert(f.individual);
    for (const auto& r : roles) {
        out.insert(r.subject);
        out.insert(r.object);
    }
    return out;
}

ClosedABox deductive_closure(const Ontology& o)
{
    return deductive_closure(o, classify(o));
}

ClosedABox deductive_closure(const Ontology& o, const Classification& cls)
{
    ClosedABox out;
    std::vector<ExistsLeft> left;
    for (const auto& ax : o.tbox())
        if (const auto* e = std::get_if<ExistsLeft>(&ax))
            left.push_back(*e);
    for (const auto& r : o.role_assertions())
        out.roles.insert(r);

    std::deque<ConceptAssertion> work;
    auto add = [&](const ConceptName& c, const IndividualName& a) {
        if (out.facts.insert(ConceptAssertion{c, a}).second)
            work.push_back(ConceptAssertion{c, a});
    };
    for (const auto& ca : o.concept_assertions())
        add(ca.concept_name, ca.individual);

    while (!work.empty()) {
        ConceptAssertion f = work.front();
        work.pop_front();
        for (const auto& sup : cls.subsumers(f.concept_name))
            add(sup, f.individual);
        for (const auto& e : left) {
            if (e.filler != f.concept_name)
                continue;
            for (const auto& r : out.roles)
                if (r.role == e.role && r.object == f.individual)
                    add(e.sup, r.subject);
        }
    }

    for (auto it = out.facts.begin(); it != out.facts.end(); ++it) {
        for (auto jt = it; jt != out.facts.end(); ++jt) {
            if (jt->individual != it->individual)
                continue;
            if (cls.disjoint(it->concept_name, jt->concept_name))
                out.inconsistent_individuals.insert(it->individual);
        }
    }
    return out;
}

}  // namespace rccmerge
