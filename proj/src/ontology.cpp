#include "rccmerge/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rccmerge {

bool is_valid_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Disjointness make_disjointness(ConceptName a, ConceptName b)
{
    if (b < a)
        std::swap(a, b);
    return Disjointness{std::move(a), std::move(b)};
}

bool is_role_axiom(const Axiom& ax)
{
    return std::holds_alternative<ExistsRight>(ax) || std::holds_alternative<ExistsLeft>(ax);
}

bool Signature::has_concept(const ConceptName& c) const
{
    return std::find(concepts.begin(), concepts.end(), c) != concepts.end();
}

bool Signature::has_role(const RoleName& r) const
{
    return std::find(roles.begin(), roles.end(), r) != roles.end();
}

bool Signature::has_individual(const IndividualName& a) const
{
    return std::find(individuals.begin(), individuals.end(), a) != individuals.end();
}

namespace {

template <class T>
void push_unique(std::vector<T>& v, const T& x)
{
    if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
}

struct AxiomNames {
    std::vector<ConceptName> concepts;
    std::vector<RoleName> roles;
};

AxiomNames names_of(const Axiom& ax)
{
    return std::visit(
        [](const auto& a) -> AxiomNames {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Subsumption>)
                return {{a.sub, a.sup}, {}};
            else if constexpr (std::is_same_v<T, Disjointness>)
                return {{a.first, a.second}, {}};
            else if constexpr (std::is_same_v<T, ExistsRight>)
                return {{a.sub, a.filler}, {a.role}};
            else
                return {{a.filler, a.sup}, {a.role}};
        },
        ax);
}

Axiom normalized(Axiom ax)
{
    if (auto* d = std::get_if<Disjointness>(&ax))
        return make_disjointness(d->first, d->second);
    return ax;
}

}  // namespace

Ontology::Ontology(std::vector<Axiom> tbox, std::vector<Assertion> abox,
                   std::vector<ConceptName> extra_concepts)
{
    std::set<Axiom> seen_ax;
    for (auto& raw : tbox) {
        Axiom ax = normalized(std::move(raw));
        if (!seen_ax.insert(ax).second)
            continue;
        auto names = names_of(ax);
        for (const auto& c : names.concepts)
            note_concept(c);
        for (const auto& r : names.roles)
            note_role(r);
        tbox_.push_back(std::move(ax));
    }
    std::set<Assertion> seen_as;
    for (auto& as : abox) {
        if (!seen_as.insert(as).second)
            continue;
        if (const auto* ca = std::get_if<ConceptAssertion>(&as)) {
            note_concept(ca->concept_name);
            note_individual(ca->individual);
        } else {
            const auto& ra = std::get<RoleAssertion>(as);
            note_role(ra.role);
            note_individual(ra.subject);
            note_individual(ra.object);
        }
        abox_.push_back(std::move(as));
    }
    for (const auto& c : extra_concepts)
        note_concept(c);
}

void Ontology::note_concept(const ConceptName& c)
{
    if (!is_valid_identifier(c.str()))
        throw SignatureError("invalid concept name '" + c.str() + "'");
    if (signature_.has_role(RoleName{c.str()}) || signature_.has_individual(IndividualName{c.str()}))
        throw SignatureError("name '" + c.str() + "' used both as a concept and as another kind of name");
    push_unique(signature_.concepts, c);
}

void Ontology::note_role(const RoleName& r)
{
    if (!is_valid_identifier(r.str()))
        throw SignatureError("invalid role name '" + r.str() + "'");
    if (signature_.has_concept(ConceptName{r.str()}) || signature_.has_individual(IndividualName{r.str()}))
        throw SignatureError("name '" + r.str() + "' used both as a role and as another kind of name");
    push_unique(signature_.roles, r);
}

void Ontology::note_individual(const IndividualName& a)
{
    if (!is_valid_identifier(a.str()))
        throw SignatureError("invalid individual name '" + a.str() + "'");
    if (signature_.has_concept(ConceptName{a.str()}) || signature_.has_role(RoleName{a.str()}))
        throw SignatureError("name '" + a.str() + "' used both as an individual and as another kind of name");
    push_unique(signature_.individuals, a);
}

std::vector<ConceptAssertion> Ontology::concept_assertions() const
{
    std::vector<ConceptAssertion> out;
    for (const auto& as : abox_)
        if (const auto* ca = std::get_if<ConceptAssertion>(&as))
            out.push_back(*ca);
    return out;
}

std::vector<RoleAssertion> Ontology::role_assertions() const
{
    std::vector<RoleAssertion> out;
    for (const auto& as : abox_)
        if (const auto* ra = std::get_if<RoleAssertion>(&as))
            out.push_back(*ra);
    return out;
}

bool operator==(const Ontology& a, const Ontology& b)
{
    auto sorted_concepts = [](const Ontology& o) {
        std::set<ConceptName> s(o.concepts().begin(), o.concepts().end());
        return s;
    };
    return a.tbox_set() == b.tbox_set() && a.abox_set() == b.abox_set()
        && sorted_concepts(a) == sorted_concepts(b);
}

std::string to_string(const Axiom& ax)
{
    return std::visit(
        [](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, Subsumption>)
                return a.sub.str() + " <= " + a.sup.str();
            else if constexpr (std::is_same_v<T, Disjointness>)
                return a.first.str() + " & " + a.second.str() + " <= bot";
            else if constexpr (std::is_same_v<T, ExistsRight>)
                return a.sub.str() + " <= some " + a.role.str() + "." + a.filler.str();
            else
                return "some " + a.role.str() + "." + a.filler.str() + " <= " + a.sup.str();
        },
        ax);
}

std::string to_string(const Assertion& as)
{
    if (const auto* ca = std::get_if<ConceptAssertion>(&as))
        return ca->concept_name.str() + "(" + ca->individual.str() + ")";
    const auto& ra = std::get<RoleAssertion>(as);
    return ra.role.str() + "(" + ra.subject.str() + "," + ra.object.str() + ")";
}

std::string to_text(const Ontology& o)
{
    std::ostringstream out;
    for (const auto& ax : o.tbox())
        out << to_string(ax) << '\n';
    for (const auto& as : o.abox())
        out << to_string(as) << '\n';
    return out.str();
}

}  // namespace rccmerge
