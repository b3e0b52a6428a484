#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "renaming.hpp"

#include "rccmerge/classify.hpp"
#include "rccmerge/translate.hpp"

#include <doctest.h>

using namespace rccmerge;
using namespace rccmerge::testing;

namespace {

const Relation PP_EQ{Base::PP, Base::EQ};
const Relation DR{Base::DR};

Scenario pair_scenario(Relation r)
{
    Qcn n({"C", "D"});
    n.set(0, 1, r);
    return Scenario(n);
}

// Calls visit with every assignment of non-empty regions over the universe.
template <class F>
void for_each_regions(std::size_t variables, std::size_t universe, F visit)
{
    const PointSet last = all_points(universe);
    std::vector<PointSet> regions(variables, 1);
    for (;;) {
        visit(regions);
        std::size_t d = 0;
        while (d < variables && regions[d] == last)
            regions[d++] = 1;
        if (d == variables)
            return;
        ++regions[d];
    }
}

std::vector<std::string> names_of(const std::vector<ConceptName>& cs)
{
    std::vector<std::string> out;
    for (const auto& c : cs)
        out.push_back(c.str());
    return out;
}

std::map<ConceptName, PointSet> fixed_regions(const std::vector<std::string>& vars, const std::vector<PointSet>& r)
{
    std::map<ConceptName, PointSet> out;
    for (std::size_t k = 0; k < vars.size(); ++k)
        out[ConceptName{vars[k]}] = r[k];
    return out;
}

}  // namespace

TEST_SUITE("translate")
{
    TEST_CASE("forward mode names")
    {
        CHECK(parse_forward_mode("axioms") == ForwardMode::Axioms);
        CHECK(parse_forward_mode(to_string(ForwardMode::Closure)) == ForwardMode::Closure);
        CHECK_THROWS_AS(parse_forward_mode("all"), std::invalid_argument);
    }

    TEST_CASE("forward translation of the first source")
    {
        auto t = forward(running_example()[0]);
        const auto& n = t.network;
        CHECK(n.variables() == std::vector<std::string>{"P", "T", "D", "B"});
        CHECK(n.at("P", "T") == PP_EQ);
        CHECK(n.at("T", "D") == DR);
        CHECK(n.at("P", "B") == PP_EQ);
        CHECK(n.at("P", "D") == DR);
        CHECK(n.at("B", "D") == DR);
        CHECK(n.at("T", "B").is_full());
        CHECK(t.conflicting_pairs.empty());
        CHECK(t.unsatisfiable.empty());
        CHECK(is_consistent(n));
    }

    TEST_CASE("forward translation examples")
    {
        auto single = forward(parse_ontology("C <= D"), ForwardMode::Axioms, {ConceptName{"C"}, ConceptName{"D"}, ConceptName{"E"}});
        CHECK(single.network.at("C", "D") == PP_EQ);
        CHECK(single.network.at("C", "E").is_full());
        CHECK(single.network.at("D", "E").is_full());

        auto clash = forward(parse_ontology("C <= D\nC & D <= bot"));
        CHECK(clash.network.at("C", "D").is_empty());
        CHECK(clash.conflicting_pairs == std::vector<std::pair<std::string, std::string>>{{"C", "D"}});
        CHECK_FALSE(is_consistent(clash.network));

        auto self = forward(parse_ontology("C & C <= bot\nC <= D"));
        CHECK(self.network.at("C", "C").is_empty());
        CHECK(self.unsatisfiable == std::vector<ConceptName>{ConceptName{"C"}});

        CHECK_THROWS(forward(parse_ontology("C <= D"), ForwardMode::Axioms, {ConceptName{"C"}}));
    }

    TEST_CASE("role axioms only contribute what they add")
    {
        auto o = parse_ontology("A <= B\nB <= C\nA <= some r.X\nsome r.X <= Y\nY <= Z");
        auto t = forward(o);
        CHECK(t.role_axioms.size() == 2);
        CHECK(t.network.at("A", "B") == PP_EQ);
        CHECK(t.network.at("A", "C").is_full());
        CHECK(t.network.at("A", "Y") == PP_EQ);
        CHECK(t.network.at("A", "Z") == PP_EQ);
        CHECK(t.network.at("Y", "Z") == PP_EQ);
        auto closed = forward(o, ForwardMode::Closure);
        CHECK(closed.network.at("A", "C") == PP_EQ);

        auto empty = forward(parse_ontology("A <= some r.B\nB & B <= bot"));
        CHECK(empty.network.at("A", "A").is_empty());
        CHECK(empty.unsatisfiable.size() == 2);
    }

    TEST_CASE("closure mode carries every entailed atomic fact")
    {
        Rng rng(41);
        OntologyShape shape;
        shape.concepts = 4;
        shape.roles = 1;
        shape.max_axioms = 6;
        shape.max_fillers = 2;
        for (int round = 0; round < 100; ++round) {
            auto o = random_ontology(rng, shape);
            auto cls = classify(o);
            auto n = forward(o, ForwardMode::Closure).network;
            for (const auto& a : o.concepts())
                CHECK(n.at(a.str(), a.str()).is_empty() == cls.unsatisfiable(a));
            for (const auto& a : o.concepts())
                for (const auto& b : o.concepts()) {
                    if (a == b || cls.unsatisfiable(a) || cls.unsatisfiable(b))
                        continue;
                    auto r = n.at(a.str(), b.str());
                    CHECK(cls.subsumes(a, b) == r.subset_of(PP_EQ));
                    CHECK(cls.disjoint(a, b) == r.subset_of(DR));
                }
        }
    }

    TEST_CASE("role-free TBoxes: fulfilling models are exactly the solutions")
    {
        Rng rng(42);
        OntologyShape shape;
        shape.concepts = 3;
        shape.roles = 0;
        shape.max_axioms = 4;
        for (int round = 0; round < 150; ++round) {
            auto o = random_ontology(rng, shape);
            CAPTURE(to_text(o));
            const auto vars = names_of(o.concepts());
            CompiledOntology compiled(o, o.concepts());
            for (ForwardMode mode : {ForwardMode::Axioms, ForwardMode::Closure}) {
                auto n = forward(o, mode).network;
                for (std::size_t u = 1; u <= 3; ++u)
                    for_each_regions(vars.size(), u, [&](const std::vector<PointSet>& r) {
                        SetInterpretation s{u, r};
                        bool model = compiled.is_model(r, u, {});
                        CHECK(model == satisfies(s, n));
                        if (model) {
                            auto inflated = inflate(s, vars, o.signature());
                            CHECK(is_model(inflated, o));
                            CHECK(inflated.is_fulfilling(o.concepts()));
                            auto flat = flatten(compiled.interpretation(r, u, {}), vars);
                            CHECK(flat.regions == r);
                        }
                    });
            }
        }
    }

    TEST_CASE("fulfilling-model existence agrees with consistency of the translation")
    {
        Rng rng(43);
        OntologyShape shape;
        shape.roles = 1;
        shape.min_axioms = 1;
        shape.max_axioms = 6;
        shape.max_fillers = 2;
        shape.role_axiom_percent = 40;
        int consistent = 0, total = 0;
        for (int round = 0; round < 200; ++round) {
            shape.concepts = round % 2 ? 4 : 3;
            auto o = random_ontology(rng, shape);
            CAPTURE(to_text(o));
            bool exists = has_fulfilling_model(o, o.concepts(), 4);
            CHECK(exists == is_consistent(forward(o, ForwardMode::Axioms).network));
            CHECK(exists == is_consistent(forward(o, ForwardMode::Closure).network));
            consistent += exists;
            ++total;
        }
        CHECK(consistent > total / 5);
        CHECK(consistent < total);
    }

    TEST_CASE("flatten and inflate")
    {
        DlInterpretation i;
        i.domain_size = 3;
        i.concepts[ConceptName{"C"}] = 0b011;
        i.concepts[ConceptName{"D"}] = 0b111;
        auto s = flatten(i, {"C", "D"});
        CHECK(s.universe_size == 3);
        CHECK(s.regions == std::vector<PointSet>{0b011, 0b111});
        CHECK_THROWS_AS(flatten(i, {"C", "E"}), std::invalid_argument);

        Signature sig;
        sig.individuals = {IndividualName{"a"}};
        auto back = inflate(SetInterpretation{2, {0b01, 0b11}}, {"C", "D"}, sig);
        CHECK(back.extension(ConceptName{"C"}) == 0b01);
        CHECK(back.individuals.at(IndividualName{"a"}) == 0);
        CHECK(back.successors(RoleName{"r"}, 0) == 0);
    }

    TEST_CASE("fresh names avoid the reserved signature")
    {
        Signature sig;
        sig.concepts = {ConceptName{"SubB1"}, ConceptName{"B"}};
        sig.individuals = {IndividualName{"x_2"}};
        FreshNamePool pool(sig);
        pool.reserve("SubB3");
        CHECK(pool.concept_name("SubB") == ConceptName{"SubB2"});
        CHECK(pool.concept_name("SubB") == ConceptName{"SubB4"});
        CHECK(pool.concept_name("IntBC") == ConceptName{"IntBC1"});
        CHECK(pool.individual() == IndividualName{"x_1"});
        CHECK(pool.individual() == IndividualName{"x_3"});
    }

    TEST_CASE("gadgets for a single pair")
    {
        CHECK(backward(pair_scenario(Relation{Base::EQ})) == parse_ontology("C <= D\nD <= C"));
        CHECK(backward(pair_scenario(DR)) == parse_ontology("C & D <= bot"));
        CHECK(backward(pair_scenario(PP_EQ)) == parse_ontology("C <= D"));
        CHECK(backward(pair_scenario(Relation{Base::PPi, Base::EQ})) == parse_ontology("D <= C"));
        CHECK(backward(pair_scenario(Relation{Base::PP}))
              == parse_ontology("C <= D\nSubD1 <= D\nSubD1 & C <= bot\nC(x_1)\nSubD1(x_2)\nD(x_1)\nD(x_2)"));
        CHECK(backward(pair_scenario(Relation{Base::PPi}))
              == parse_ontology("D <= C\nSubC1 <= C\nSubC1 & D <= bot\nD(x_1)\nSubC1(x_2)\nC(x_1)\nC(x_2)"));

        auto po = backward(pair_scenario(Relation{Base::PO}));
        CHECK(po.tbox().size() == 6);
        CHECK(po.abox().size() == 7);
        CHECK(equal_up_to_renaming(po,
                                   parse_ontology("X <= C\nX <= D\nY <= C\nY & D <= bot\nZ <= D\nZ & C <= bot\n"
                                                  "X(a)\nC(a)\nD(a)\nY(c)\nC(c)\nZ(d)\nD(d)"),
                                   {"C", "D"}));
        // Some model overlaps C and D without either containing the other.
        CHECK(has_fulfilling_model(po, po.concepts(), 3));
        CHECK(has_fulfilling_extension(po, {{ConceptName{"C"}, 0b011}, {ConceptName{"D"}, 0b110}}, 3));
        CHECK_FALSE(has_fulfilling_extension(po, {{ConceptName{"C"}, 0b011}, {ConceptName{"D"}, 0b111}}, 3));
    }

    TEST_CASE("backward output parses back")
    {
        for (const auto& q : all_quasi_atomic({"A", "B", "C"})) {
            auto o = backward(Scenario(q));
            CHECK(parse_ontology(to_text(o)) == o);
            for (const auto& v : q.variables())
                CHECK(o.signature().has_concept(ConceptName{v}));
        }
    }

    TEST_CASE("backward models flatten to solutions and solutions extend to models")
    {
        const std::vector<std::string> vars{"A", "B", "C"};
        std::size_t consistent = 0;
        for (const auto& q : all_quasi_atomic(vars)) {
            auto o = backward(Scenario(q));
            CAPTURE(to_text(o));
            if (is_consistent(q))
                ++consistent;
            for_each_regions(3, 3, [&](const std::vector<PointSet>& r) {
                CHECK(has_fulfilling_extension(o, fixed_regions(vars, r), 3) == satisfies(SetInterpretation{3, r}, q));
            });
        }
        CHECK(consistent > 0);
    }

    TEST_CASE("solutions over seven points extend to models of the back-translation")
    {
        const std::vector<std::string> vars{"A", "B", "C"};
        for (const auto& q : all_quasi_atomic(vars)) {
            auto sol = find_set_model(q, 7);
            CHECK(sol.has_value() == is_consistent(q));
            if (sol)
                CHECK(has_fulfilling_extension(backward(Scenario(q)), fixed_regions(vars, sol->regions), 7));
        }
    }

    TEST_CASE("round trip through both translations keeps the minimal network")
    {
        const std::vector<std::string> vars{"A", "B", "C"};
        for (const auto& q : all_quasi_atomic(vars)) {
            auto o = backward(Scenario(q));
            for (ForwardMode mode : {ForwardMode::Axioms, ForwardMode::Closure}) {
                auto again = minimal_network(forward(o, mode).network).restricted_to(vars);
                CHECK(again == minimal_network(q));
            }
        }
    }
}
