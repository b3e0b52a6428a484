#ifndef RCCMERGE_TESTS_FIXTURES_HPP
#define RCCMERGE_TESTS_FIXTURES_HPP

// The four-source running example and its reference values.

#include "rccmerge/ontology.hpp"
#include "rccmerge/rcc5.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace rccmerge::testing {

inline std::string data_dir()
{
    return RCCMERGE_DATA_DIR;
}

inline std::vector<std::string> running_example_paths()
{
    std::vector<std::string> out;
    for (int k = 1; k <= 4; ++k)
        out.push_back(data_dir() + "/running_example/o" + std::to_string(k) + ".onto");
    return out;
}

inline std::vector<Ontology> running_example()
{
    std::vector<Ontology> out;
    for (const auto& p : running_example_paths())
        out.push_back(load_ontology(p));
    return out;
}

/// Column layout of the reference distance table.
inline const std::vector<std::string> example_order{"T", "P", "B", "D"};

struct ExpectedColumn {
    std::string first, second;
    std::array<int, 5> distances;  // DR, PO, PP, PPi, EQ
};

inline const std::vector<ExpectedColumn> expected_distance_table{
    {"T", "P", {8, 4, 4, 0, 0}},
    {"T", "B", {2, 2, 2, 3, 3}},
    {"T", "D", {2, 3, 5, 4, 6}},
    {"P", "B", {2, 1, 0, 1, 0}},
    {"P", "D", {4, 4, 6, 4, 6}},
    {"B", "D", {6, 4, 3, 4, 3}},
};

struct ExpectedConstraint {
    std::string first, second;
    Relation rel;
};

inline const std::vector<ExpectedConstraint> expected_initial_network{
    {"T", "P", Relation{Base::PPi, Base::EQ}},
    {"T", "B", Relation{Base::DR, Base::PO, Base::PP}},
    {"T", "D", Relation{Base::DR}},
    {"P", "B", Relation{Base::PP, Base::EQ}},
    {"P", "D", Relation{Base::DR, Base::PO, Base::PPi}},
    {"B", "D", Relation{Base::PP, Base::EQ}},
};

inline const std::vector<ExpectedConstraint> expected_selected_scenario{
    {"T", "P", Relation{Base::PPi, Base::EQ}},
    {"T", "D", Relation{Base::DR}},
    {"P", "D", Relation{Base::DR}},
    {"T", "B", Relation{Base::PP}},
    {"P", "B", Relation{Base::PP}},
    {"B", "D", Relation{Base::PPi}},
};

/// Reference back-translation of the selected scenario. SubBo1..3 and the
/// individuals are fresh names, so comparison is up to renaming them.
inline const char* expected_back_translation = R"(P <= T
T & D <= bot
P & D <= bot
T <= B
SubBo1 <= B
SubBo1 & T <= bot
P <= B
SubBo2 <= B
SubBo2 & P <= bot
D <= B
SubBo3 <= B
SubBo3 & D <= bot
T(t1)
SubBo1(s1)
B(t1)
B(s1)
P(p1)
SubBo2(s2)
B(p1)
B(s2)
D(d1)
SubBo3(s3)
B(d1)
B(s3)
)";

/// Reference closure of the third source's ABox.
inline const char* expected_closure_o3[] = {"P(p3)", "P(b3)", "P(d3)", "T(t3)", "T(d3)",
                                            "T(b3)", "T(p3)", "D(d3)", "D(b3)", "B(b3)"};

}  // namespace rccmerge::testing

#endif  // RCCMERGE_TESTS_FIXTURES_HPP
