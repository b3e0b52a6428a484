#ifndef RCCMERGE_SEMANTICS_HPP
#define RCCMERGE_SEMANTICS_HPP

#include "rccmerge/ontology.hpp"

#include <cstdint>
#include <map>

namespace rccmerge {

/// Subset of a small finite universe {0, ..., 63}.
using PointSet = std::uint64_t;

inline bool contains_point(PointSet s, std::size_t p) { return (s >> p) & 1u; }
inline PointSet all_points(std::size_t n) { return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

/// Finite DL interpretation. Concepts and roles not listed are empty.
struct DlInterpretation {
    std::size_t domain_size = 0;
    std::map<ConceptName, PointSet> concepts;
    /// roles[r][x] = successors of x.
    std::map<RoleName, std::vector<PointSet>> roles;
    std::map<IndividualName, std::size_t> individuals;

    PointSet extension(const ConceptName& c) const;
    PointSet successors(const RoleName& r, std::size_t x) const;
    void add_edge(const RoleName& r, std::size_t x, std::size_t y);

    /// Every listed concept name has a non-empty extension.
    bool is_fulfilling(const std::vector<ConceptName>& names) const;
};

bool satisfies(const DlInterpretation& i, const Axiom& ax);
/// An unmapped individual makes every assertion about it false.
bool satisfies(const DlInterpretation& i, const Assertion& as);
bool is_model(const DlInterpretation& i, const Ontology& o);

}  // namespace rccmerge

#endif  // RCCMERGE_SEMANTICS_HPP
