#ifndef RCCMERGE_MERGE_HPP
#define RCCMERGE_MERGE_HPP

#include "rccmerge/distance.hpp"

namespace rccmerge {

/// phi together with the base relations outside phi that are closest to
/// the profile of (a, b). relax of the full relation is itself.
Relation relax(Relation phi, const std::string& a, const std::string& b, const DistanceTable& table);

/// Largest profile distance over the members of phi. Throws
/// std::invalid_argument for the empty relation.
int val(Relation phi, const std::string& a, const std::string& b, const DistanceTable& table);

struct MergeStep {
    /// Canonical pairs relaxed in this iteration.
    std::vector<std::pair<std::string, std::string>> relaxed;
    int val = 0;
    /// Network after the relaxation.
    Qcn snapshot;
};

struct MergeTrace {
    Qcn initial;
    std::vector<MergeStep> iterations;
};

struct MergeResult {
    Qcn merged;
    MergeTrace trace;
    DistanceTable table;
};

/// Starts from the closest relation on every pair and, while the network is
/// inconsistent, relaxes all non-full constraints of maximal val at once.
MergeResult merge(const std::vector<Qcn>& profile);
MergeResult merge(const DistanceTable& table);

}  // namespace rccmerge

#endif  // RCCMERGE_MERGE_HPP
