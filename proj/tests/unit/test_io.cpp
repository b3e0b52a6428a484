#include "fixtures.hpp"
#include "generators.hpp"

#include "rccmerge/classify.hpp"
#include "rccmerge/io.hpp"
#include "rccmerge/merge.hpp"
#include "rccmerge/translate.hpp"

#include <doctest.h>

using namespace rccmerge;
using namespace rccmerge::testing;

TEST_SUITE("io")
{
    TEST_CASE("QCN JSON stores one direction per pair")
    {
        Qcn n({"T", "P"});
        n.set("T", "P", Relation{Base::PPi, Base::EQ});
        auto j = to_json(n);
        REQUIRE(j["constraints"].size() == 1);
        CHECK(j["constraints"][0]["from"] == "P");
        CHECK(j["constraints"][0]["to"] == "T");
        CHECK(j["constraints"][0]["rel"] == Json::array({"PP", "EQ"}));
        CHECK(qcn_from_json(j) == n);
    }

    TEST_CASE("QCN JSON round trip")
    {
        Rng rng(81);
        for (int round = 0; round < 200; ++round) {
            auto n = random_qcn(rng, 1 + round % 5, 30, true);
            if (round % 7 == 0)
                n.set(0, 0, Relation::empty());
            CHECK(qcn_from_json(Json::parse(dump(to_json(n)))) == n);
        }
    }

    TEST_CASE("malformed QCN JSON")
    {
        CHECK_THROWS_AS(qcn_from_json(Json::parse("[]")), InputError);
        CHECK_THROWS_AS(qcn_from_json(Json::parse(R"({"variables":["a","a"]})")), InputError);
        CHECK_THROWS_AS(
            qcn_from_json(Json::parse(R"({"variables":["a"],"constraints":[{"from":"a","to":"b","rel":[]}]})")),
            InputError);
        CHECK_THROWS_AS(qcn_from_json(Json::parse(
                            R"({"variables":["a","b"],"constraints":[{"from":"a","to":"b","rel":["PP"]},)"
                            R"({"from":"b","to":"a","rel":["PP"]}]})")),
                        InputError);
        CHECK_THROWS_AS(
            qcn_from_json(Json::parse(R"({"variables":["a","b"],"constraints":[{"from":"a","to":"b","rel":["XX"]}]})")),
            InputError);
        CHECK_THROWS_AS(
            qcn_from_json(Json::parse(R"({"variables":["a"],"constraints":[{"from":"a","to":"a","rel":["PP"]}]})")),
            InputError);
        auto bare = qcn_from_json(Json::parse(R"({"variables":["a","b"]})"));
        CHECK(bare.at(0, 1).is_full());
    }

    TEST_CASE("ontology and closure JSON")
    {
        auto o3 = running_example()[2];
        auto j = to_json(o3);
        CHECK(j["tbox"].size() == 4);
        CHECK(j["abox"][0] == "P(p3)");
        CHECK(j["signature"]["concepts"] == Json::array({"B", "D", "P", "T"}));
        auto keys = std::vector<std::string>{};
        for (auto it = j.begin(); it != j.end(); ++it)
            keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"abox", "signature", "tbox"});

        auto c = to_json(deductive_closure(o3));
        CHECK(c["facts"].size() == 10);
        CHECK(c["inconsistent_individuals"].empty());

        auto cls = to_json(classify(parse_ontology("A <= B\nB & C <= bot")));
        CHECK(cls["subsumptions"] == Json::array({Json::array({"A", "B"})}));
        CHECK(cls["disjoint"].size() == 2);
    }

    TEST_CASE("trace and table JSON")
    {
        std::vector<Qcn> profile;
        for (const auto& o : running_example())
            profile.push_back(forward(o, ForwardMode::Axioms, {ConceptName{"T"}, ConceptName{"P"}, ConceptName{"B"}, ConceptName{"D"}}).network);
        auto result = merge(profile);
        auto trace = to_json(result.trace);
        REQUIRE(trace["iterations"].size() == 2);
        CHECK(trace["iterations"][0]["val"] == 4);
        CHECK(trace["iterations"][1]["relaxed"] == Json::array({Json::array({"B", "D"})}));
        CHECK(qcn_from_json(trace["iterations"][1]["snapshot"]) == result.merged);

        auto table = to_json(result.table);
        CHECK(table["sources"] == 4);
        CHECK(table["pairs"].size() == 6);
        CHECK(table["pairs"][0]["pair"] == Json::array({"B", "D"}));
        CHECK(table["pairs"][0]["distances"]["DR"] == 6);
        CHECK(table["pairs"][0]["distances"]["EQ"] == 3);
    }

    TEST_CASE("DOT omits unconstrained pairs")
    {
        Qcn n({"a", "b", "c"});
        n.set("b", "a", Relation{Base::PP});
        auto dot = to_dot(n, "g");
        CHECK(dot.rfind("digraph g {\n", 0) == 0);
        CHECK(dot.find("\"a\" -> \"b\" [label=\"{PPi}\"];") != std::string::npos);
        CHECK(dot.find("\"c\" [label") == std::string::npos);
        CHECK(dot.find("-> \"c\"") == std::string::npos);
        CHECK(dot.back() == '\n');
    }
}
