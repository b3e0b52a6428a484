#include "generators.hpp"

#include <set>

namespace rccmerge::testing {

std::vector<ConceptName> concept_names(std::size_t n)
{
    std::vector<ConceptName> out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(std::string(1, static_cast<char>('A' + i)));
    return out;
}

std::vector<RoleName> role_names(std::size_t n)
{
    std::vector<RoleName> out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(std::string(1, static_cast<char>('r' + i)));
    return out;
}

std::vector<IndividualName> individual_names(std::size_t n)
{
    std::vector<IndividualName> out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

std::vector<Axiom> all_axioms(const std::vector<ConceptName>& concepts, const std::vector<RoleName>& roles)
{
    std::vector<Axiom> out;
    for (const auto& a : concepts)
        for (const auto& b : concepts)
            out.push_back(Subsumption{a, b});
    for (std::size_t i = 0; i < concepts.size(); ++i)
        for (std::size_t j = i; j < concepts.size(); ++j)
            out.push_back(make_disjointness(concepts[i], concepts[j]));
    for (const auto& r : roles)
        for (const auto& a : concepts)
            for (const auto& b : concepts) {
                out.push_back(ExistsRight{a, r, b});
                out.push_back(ExistsLeft{r, a, b});
            }
    return out;
}

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

Ontology random_ontology(Rng& rng, const OntologyShape& shape)
{
    auto cs = concept_names(shape.concepts);
    auto rs = role_names(shape.roles);
    auto is = individual_names(shape.individuals);
    std::uniform_int_distribution<std::size_t> count(shape.min_axioms, shape.max_axioms);
    std::uniform_int_distribution<int> percent(0, 99);

    std::vector<Axiom> tbox;
    std::set<ConceptName> fillers;
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
        bool role_axiom = !rs.empty() && percent(rng) < shape.role_axiom_percent;
        if (!role_axiom) {
            if (percent(rng) < 60)
                tbox.push_back(Subsumption{pick(rng, cs), pick(rng, cs)});
            else
                tbox.push_back(make_disjointness(pick(rng, cs), pick(rng, cs)));
            continue;
        }
        if (percent(rng) < 50) {
            ConceptName filler = pick(rng, cs);
            if (!fillers.count(filler) && fillers.size() >= shape.max_fillers) {
                if (fillers.empty())
                    continue;
                filler = *fillers.begin();
            }
            fillers.insert(filler);
            tbox.push_back(ExistsRight{pick(rng, cs), pick(rng, rs), filler});
        } else {
            tbox.push_back(ExistsLeft{pick(rng, rs), pick(rng, cs), pick(rng, cs)});
        }
    }

    std::vector<Assertion> abox;
    if (!is.empty()) {
        for (std::size_t k = 0; k < shape.concept_assertions; ++k)
            abox.push_back(ConceptAssertion{pick(rng, cs), pick(rng, is)});
        if (!rs.empty())
            for (std::size_t k = 0; k < shape.role_assertions; ++k)
                abox.push_back(RoleAssertion{pick(rng, rs), pick(rng, is), pick(rng, is)});
    }
    return Ontology(std::move(tbox), std::move(abox), cs);
}

Qcn random_qcn(Rng& rng, std::size_t variables, int full_percent, bool allow_empty)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < variables; ++i)
        names.push_back("v" + std::to_string(i + 1));
    Qcn n(names);
    std::uniform_int_distribution<int> percent(0, 99);
    std::uniform_int_distribution<int> bits(allow_empty ? 0 : 1, 31);
    for (std::size_t i = 0; i < variables; ++i)
        for (std::size_t j = i + 1; j < variables; ++j)
            if (percent(rng) >= full_percent)
                n.set(i, j, Relation::from_bits(static_cast<std::uint8_t>(bits(rng))));
    return n;
}

Qcn random_atomic_consistent(Rng& rng, std::size_t variables)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < variables; ++i)
        names.push_back("v" + std::to_string(i + 1));
    Qcn n(names);
    std::uniform_int_distribution<PointSet> region(1, 127);
    std::vector<PointSet> regions;
    for (std::size_t i = 0; i < variables; ++i)
        regions.push_back(region(rng));
    for (std::size_t i = 0; i < variables; ++i)
        for (std::size_t j = i + 1; j < variables; ++j)
            n.set(i, j, Relation{base_between(regions[i], regions[j])});
    return n;
}

std::vector<Relation> scenario_labels()
{
    return {Relation{Base::DR},           Relation{Base::PO},  Relation{Base::PP},
            Relation{Base::PPi},          Relation{Base::EQ},  Relation{Base::PP, Base::EQ},
            Relation{Base::PPi, Base::EQ}};
}

std::vector<Qcn> all_quasi_atomic(const std::vector<std::string>& variables)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            pairs.emplace_back(i, j);
    const auto labels = scenario_labels();
    std::vector<Qcn> out;
    std::vector<std::size_t> digit(pairs.size(), 0);
    for (;;) {
        Qcn n(variables);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            n.set(pairs[k].first, pairs[k].second, labels[digit[k]]);
        out.push_back(n);
        std::size_t d = 0;
        while (d < digit.size() && digit[d] + 1 == labels.size())
            digit[d++] = 0;
        if (d == digit.size())
            break;
        ++digit[d];
    }
    return out;
}

}  // namespace rccmerge::testing
