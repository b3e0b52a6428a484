#include "rccmerge/semantics.hpp"

namespace rccmerge {

PointSet DlInterpretation::extension(const ConceptName& c) const
{
    auto it = concepts.find(c);
    return it == concepts.end() ? 0 : it->second;
}

PointSet DlInterpretation::successors(const RoleName& r, std::size_t x) const
{
    auto it = roles.find(r);
    if (it == roles.end() || x >= it->second.size())
        return 0;
    return it->second[x];
}

void DlInterpretation::add_edge(const RoleName& r, std::size_t x, std::size_t y)
{
    auto& succ = roles[r];
    if (succ.size() < domain_size)
        succ.resize(domain_size, 0);
    succ.at(x) |= PointSet{1} << y;
}

bool DlInterpretation::is_fulfilling(const std::vector<ConceptName>& names) const
{
    for (const auto& c : names)
        if (extension(c) == 0)
            return false;
    return true;
}

bool satisfies(const DlInterpretation& i, const Axiom& ax)
{
    return std::visit(
        [&](const auto& a) -> bool {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Subsumption>) {
                return (i.extension(a.sub) & ~i.extension(a.sup)) == 0;
            } else if constexpr (std::is_same_v<T, Disjointness>) {
                return (i.extension(a.first) & i.extension(a.second)) == 0;
            } else if constexpr (std::is_same_v<T, ExistsRight>) {
                PointSet sub = i.extension(a.sub);
                PointSet filler = i.extension(a.filler);
                for (std::size_t x = 0; x < i.domain_size; ++x)
                    if (contains_point(sub, x) && (i.successors(a.role, x) & filler) == 0)
                        return false;
                return true;
            } else {
                PointSet filler = i.extension(a.filler);
                PointSet sup = i.extension(a.sup);
                for (std::size_t x = 0; x < i.domain_size; ++x)
                    if ((i.successors(a.role, x) & filler) != 0 && !contains_point(sup, x))
                        return false;
                return true;
            }
        },
        ax);
}

bool satisfies(const DlInterpretation& i, const Assertion& as)
{
    if (const auto* ca = std::get_if<ConceptAssertion>(&as)) {
        auto it = i.individuals.find(ca->individual);
        return it != i.individuals.end() && contains_point(i.extension(ca->concept_name), it->second);
    }
    const auto& ra = std::get<RoleAssertion>(as);
    auto s = i.individuals.find(ra.subject);
    auto o = i.individuals.find(ra.object);
    if (s == i.individuals.end() || o == i.individuals.end())
        return false;
    return contains_point(i.successors(ra.role, s->second), o->second);
}

bool is_model(const DlInterpretation& i, const Ontology& o)
{
    for (const auto& ax : o.tbox())
        if (!satisfies(i, ax))
            return false;
    for (const auto& as : o.abox())
        if (!satisfies(i, as))
            return false;
    return true;
}

}  // namespace rccmerge
