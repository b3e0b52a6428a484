#include "rccmerge/translate.hpp"

#include <algorithm>
#include <stdexcept>

namespace rccmerge {

const char* to_string(ForwardMode m)
{
    return m == ForwardMode::Axioms ? "axioms" : "closure";
}

ForwardMode parse_forward_mode(std::string_view s)
{
    if (s == "axioms")
        return ForwardMode::Axioms;
    if (s == "closure")
        return ForwardMode::Closure;
    throw std::invalid_argument("unknown forward mode '" + std::string(s) + "' (expected axioms or closure)");
}

namespace {

const Relation pp_eq{Base::PP, Base::EQ};
const Relation dr{Base::DR};

void add_consequences(Qcn& net, const Classification& full, const Classification* already)
{
    const auto& names = full.concepts();
    for (const auto& a : names) {
        std::size_t i = net.index_of(a.str());
        if (full.unsatisfiable(a) && !(already && already->unsatisfiable(a)))
            net.set(i, i, Relation::empty());
        for (const auto& b : names) {
            if (a == b)
                continue;
            std::size_t j = net.index_of(b.str());
            if (full.subsumes(a, b) && !(already && already->subsumes(a, b)))
                net.constrain(i, j, pp_eq);
            if (a < b && full.disjoint(a, b) && !(already && already->disjoint(a, b)))
                net.constrain(i, j, dr);
        }
    }
}

}  // namespace

ForwardTranslation forward(const Ontology& o, ForwardMode mode, const std::vector<ConceptName>& vocabulary)
{
    std::vector<ConceptName> concepts = vocabulary.empty() ? o.concepts() : vocabulary;
    for (const auto& c : o.concepts())
        if (std::find(concepts.begin(), concepts.end(), c) == concepts.end())
            throw std::invalid_argument("concept '" + c.str() + "' is missing from the vocabulary");
    std::vector<std::string> vars;
    for (const auto& c : concepts)
        vars.push_back(c.str());

    ForwardTranslation out{Qcn(vars), {}, {}, {}};
    Qcn& net = out.network;

    std::vector<Axiom> atomic;
    for (const auto& ax : o.tbox()) {
        if (is_role_axiom(ax))
            out.role_axioms.push_back(ax);
        else
            atomic.push_back(ax);
    }

    Classification full = classify(o.tbox(), concepts);
    if (mode == ForwardMode::Closure) {
        add_consequences(net, full, nullptr);
    } else {
        for (const auto& ax : atomic) {
            if (const auto* s = std::get_if<Subsumption>(&ax)) {
                if (s->sub != s->sup)
                    net.constrain(net.index_of(s->sub.str()), net.index_of(s->sup.str()), pp_eq);
            } else {
                const auto& d = std::get<Disjointness>(ax);
                std::size_t i = net.index_of(d.first.str());
                std::size_t j = net.index_of(d.second.str());
                if (i == j)
                    net.set(i, i, Relation::empty());
                else
                    net.constrain(i, j, dr);
            }
        }
        if (!out.role_axioms.empty()) {
            Classification base = classify(atomic, concepts);
            add_consequences(net, full, &base);
        }
    }

    for (auto [i, j] : net.canonical_pairs())
        if (net.at(i, j).is_empty())
            out.conflicting_pairs.emplace_back(net.variable(i), net.variable(j));
    for (std::size_t i = 0; i < net.size(); ++i)
        if (net.at(i, i).is_empty())
            out.unsatisfiable.emplace_back(net.variable(i));
    return out;
}

FreshNamePool::FreshNamePool(const Signature& reserved)
{
    reserve(reserved);
}

void FreshNamePool::reserve(const std::string& name)
{
    used_.insert(name);
}

void FreshNamePool::reserve(const Signature& s)
{
    for (const auto& c : s.concepts)
        reserve(c.str());
    for (const auto& r : s.roles)
        reserve(r.str());
    for (const auto& a : s.individuals)
        reserve(a.str());
}

ConceptName FreshNamePool::concept_name(const std::string& stem)
{
    int& k = next_.emplace(stem, 1).first->second;
    std::string name;
    do {
        name = stem + std::to_string(k++);
    } while (used_.count(name));
    used_.insert(name);
    return ConceptName{name};
}

IndividualName FreshNamePool::individual()
{
    std::string name;
    do {
        name = "x_" + std::to_string(next_individual_++);
    } while (used_.count(name));
    used_.insert(name);
    return IndividualName{name};
}

Ontology backward(const Scenario& s, FreshNamePool& pool)
{
    const Qcn& net = s.network();
    std::vector<Axiom> tbox;
    std::vector<Assertion> abox;
    auto fact = [&](const ConceptName& c, const IndividualName& a) { abox.push_back(ConceptAssertion{c, a}); };

    for (auto [i, j] : net.canonical_pairs()) {
        ConceptName c{net.variable(i)};
        ConceptName d{net.variable(j)};
        Relation r = net.at(i, j);
        if (r == Relation{Base::EQ}) {
            tbox.push_back(Subsumption{c, d});
            tbox.push_back(Subsumption{d, c});
        } else if (r == Relation{Base::DR}) {
            tbox.push_back(make_disjointness(c, d));
        } else if (r == Relation{Base::PO}) {
            ConceptName both = pool.concept_name("Int" + c.str() + d.str());
            ConceptName only_c = pool.concept_name("Sub" + c.str());
            ConceptName only_d = pool.concept_name("Sub" + d.str());
            IndividualName a = pool.individual();
            IndividualName in_c = pool.individual();
            IndividualName in_d = pool.individual();
            tbox.push_back(Subsumption{both, c});
            tbox.push_back(Subsumption{both, d});
            tbox.push_back(Subsumption{only_c, c});
            tbox.push_back(make_disjointness(only_c, d));
            tbox.push_back(Subsumption{only_d, d});
            tbox.push_back(make_disjointness(only_d, c));
            fact(both, a);
            fact(c, in_c);
            fact(c, a);
            fact(d, in_d);
            fact(d, a);
            fact(only_c, in_c);
            fact(only_d, in_d);
        } else if (r == pp_eq) {
            tbox.push_back(Subsumption{c, d});
        } else if (r == Relation{Base::PPi, Base::EQ}) {
            tbox.push_back(Subsumption{d, c});
        } else if (r == Relation{Base::PP}) {
            ConceptName rest = pool.concept_name("Sub" + d.str());
            IndividualName inner = pool.individual();
            IndividualName outer = pool.individual();
            tbox.push_back(Subsumption{c, d});
            tbox.push_back(Subsumption{rest, d});
            tbox.push_back(make_disjointness(c, rest));
            fact(c, inner);
            fact(rest, outer);
            fact(d, inner);
            fact(d, outer);
        } else if (r == Relation{Base::PPi}) {
            ConceptName rest = pool.concept_name("Sub" + c.str());
            IndividualName inner = pool.individual();
            IndividualName outer = pool.individual();
            tbox.push_back(Subsumption{d, c});
            tbox.push_back(Subsumption{rest, c});
            tbox.push_back(make_disjointness(d, rest));
            fact(d, inner);
            fact(rest, outer);
            fact(c, inner);
            fact(c, outer);
        } else {
            throw std::invalid_argument("constraint " + to_string(r) + " is not quasi-atomic");
        }
    }

    std::vector<ConceptName> vars;
    for (const auto& v : net.variables())
        vars.emplace_back(v);
    return Ontology(std::move(tbox), std::move(abox), std::move(vars));
}

Ontology backward(const Scenario& s)
{
    FreshNamePool pool;
    for (const auto& v : s.variables())
        pool.reserve(v);
    return backward(s, pool);
}

SetInterpretation flatten(const DlInterpretation& i, const std::vector<std::string>& variables)
{
    SetInterpretation s{i.domain_size, {}};
    for (const auto& v : variables) {
        PointSet ext = i.extension(ConceptName{v});
        if (ext == 0)
            throw std::invalid_argument("interpretation is not fulfilling: concept '" + v + "' is empty");
        s.regions.push_back(ext);
    }
    return s;
}

DlInterpretation inflate(const SetInterpretation& s, const std::vector<std::string>& variables,
                         const Signature& signature)
{
    if (s.regions.size() != variables.size())
        throw std::invalid_argument("region count does not match the variables");
    DlInterpretation i;
    i.domain_size = s.universe_size;
    for (std::size_t k = 0; k < variables.size(); ++k)
        i.concepts[ConceptName{variables[k]}] = s.regions[k];
    for (const auto& a : signature.individuals)
        i.individuals[a] = 0;
    return i;
}

}  // namespace rccmerge
