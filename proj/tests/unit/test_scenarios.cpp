#include "fixtures.hpp"
#include "generators.hpp"

#include "rccmerge/scenarios.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rccmerge;
using namespace rccmerge::testing;

namespace {

Qcn merged_example()
{
    Qcn n(example_order);
    for (const auto& c : expected_initial_network)
        n.set(c.first, c.second, c.rel);
    n.set("P", "D", Relation::full());
    n.set("B", "D", Relation{Base::PO, Base::PP, Base::PPi, Base::EQ});
    return n;
}

void check_scenario_properties(const Qcn& n, const std::vector<Scenario>& found)
{
    for (const auto& s : found) {
        CHECK(is_consistent(s.network()));
        CHECK(s.network().subset_of(n));
        for (auto [i, j] : n.canonical_pairs())
            CHECK(is_scenario_label(s.at(i, j)));
    }
    for (std::size_t a = 0; a < found.size(); ++a)
        for (std::size_t b = 0; b < found.size(); ++b)
            if (a != b)
                CHECK_FALSE(found[a].network().subset_of(found[b].network()));
    for (std::size_t k = 1; k < found.size(); ++k)
        CHECK(found[k - 1].canonical_labels() < found[k].canonical_labels());
}

}  // namespace

TEST_SUITE("scenarios")
{
    TEST_CASE("scenario labels")
    {
        std::size_t count = 0;
        for (int bits = 0; bits < 32; ++bits)
            if (is_scenario_label(Relation::from_bits(static_cast<std::uint8_t>(bits))))
                ++count;
        CHECK(count == 7);
        CHECK(is_scenario_label(Relation{Base::PPi, Base::EQ}));
        CHECK_FALSE(is_scenario_label(Relation{Base::PP, Base::PPi}));
        CHECK_FALSE(is_scenario_label(Relation::empty()));
    }

    TEST_CASE("scenario construction rejects other labels")
    {
        Qcn n({"a", "b"});
        CHECK_THROWS_AS(Scenario{n}, std::invalid_argument);
        n.set(0, 1, Relation{Base::PP, Base::EQ});
        CHECK_NOTHROW(Scenario{n});
        n.set(0, 0, Relation::empty());
        CHECK_THROWS_AS(Scenario{n}, std::invalid_argument);
    }

    TEST_CASE("the merged running example admits four scenarios")
    {
        auto found = enumerate_scenarios(merged_example());
        CHECK(found.size() == 4);
        check_scenario_properties(merged_example(), found);
        for (const auto& s : found) {
            CHECK(s.at("T", "P") == Relation{Base::PPi, Base::EQ});
            CHECK(s.at("P", "B") == Relation{Base::PP});
        }
    }

    TEST_CASE("an atomic consistent network is its own scenario")
    {
        Rng rng(31);
        for (int round = 0; round < 30; ++round) {
            auto n = random_atomic_consistent(rng, 4);
            auto found = enumerate_scenarios(n);
            REQUIRE(found.size() == 1);
            CHECK(found[0].network() == n);
        }
    }

    TEST_CASE("maximality keeps a two-element label")
    {
        Qcn n({"v1", "v2", "v3"});
        n.set(0, 1, Relation{Base::PP, Base::EQ});
        auto found = enumerate_scenarios(n);
        REQUIRE_FALSE(found.empty());
        for (const auto& s : found)
            CHECK(s.at(0, 1) == Relation{Base::PP, Base::EQ});
        check_scenario_properties(n, found);
    }

    TEST_CASE("inconsistent networks have no scenario")
    {
        Qcn n({"v1", "v2", "v3"});
        n.set(0, 1, Relation{Base::PP, Base::EQ});
        n.set(1, 2, Relation{Base::PP, Base::EQ});
        n.set(0, 2, Relation{Base::DR});
        CHECK(enumerate_scenarios(n).empty());
    }

    TEST_CASE("enumeration matches brute force over three variables")
    {
        const std::vector<std::string> vars{"v1", "v2", "v3"};
        const auto candidates = all_quasi_atomic(vars);
        std::vector<Qcn> consistent;
        for (const auto& q : candidates)
            if (is_consistent(q))
                consistent.push_back(q);

        Rng rng(32);
        for (int round = 0; round < 150; ++round) {
            auto n = random_qcn(rng, 3, 35);
            auto min = minimal_network(n);
            std::vector<Qcn> refinements;
            for (const auto& q : consistent)
                if (q.subset_of(min))
                    refinements.push_back(q);
            std::vector<Qcn> maximal;
            for (const auto& q : refinements) {
                bool dominated = std::any_of(refinements.begin(), refinements.end(),
                                             [&](const Qcn& o) { return !(o == q) && q.subset_of(o); });
                if (!dominated)
                    maximal.push_back(q);
            }
            auto found = enumerate_scenarios(n);
            check_scenario_properties(n, found);
            REQUIRE(found.size() == maximal.size());
            for (const auto& s : found)
                CHECK(std::find(maximal.begin(), maximal.end(), s.network()) != maximal.end());
        }
    }

    TEST_CASE("random four-variable networks")
    {
        Rng rng(33);
        for (int round = 0; round < 100; ++round) {
            auto n = random_qcn(rng, 4, 40);
            auto found = enumerate_scenarios(n);
            CHECK(found.empty() == !is_consistent(n));
            check_scenario_properties(n, found);
        }
    }
}
