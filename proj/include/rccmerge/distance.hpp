#ifndef RCCMERGE_DISTANCE_HPP
#define RCCMERGE_DISTANCE_HPP

#include "rccmerge/qcn.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rccmerge {

/// Shortest-path length between two base relations in the conceptual
/// neighbourhood graph DR-PO, PO-PP, PO-PPi, PP-EQ, PPi-EQ.
int base_distance(Base a, Base b);

/// Distance from b to the nearest member of r. The empty relation gives 0.
int constraint_distance(Base b, Relation r);

/// The relations one pair carries across the sources, in source order.
struct ConstraintProfile {
    std::string first, second;
    std::vector<Relation> entries;
};

/// Sum of constraint_distance over the entries.
int profile_distance(Base b, const ConstraintProfile& e);

using DistanceRow = std::array<int, 5>;  // indexed by Base

/// Distances d(b, profile of (C,D)) for every unordered pair, stored in the
/// canonical orientation. Lookups in the other orientation return the row
/// of the converse relation.
class DistanceTable {
public:
    DistanceTable() = default;
    /// Throws std::invalid_argument if the networks do not share their
    /// variables, or if the profile is empty.
    explicit DistanceTable(const std::vector<Qcn>& profile);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t sources() const { return sources_; }

    /// The profile of (a, b) in that orientation.
    ConstraintProfile profile(const std::string& a, const std::string& b) const;
    /// d(b, profile) with b read in the (a, b) orientation.
    int distance(const std::string& a, const std::string& b, Base base) const;
    DistanceRow row(const std::string& a, const std::string& b) const;

    /// Canonical pairs (by name) in table order.
    std::vector<std::pair<std::string, std::string>> pairs() const;

    /// One message per (source, pair) whose constraint was empty.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::pair<std::string, std::string> key(const std::string& a, const std::string& b) const;

    std::vector<std::string> variables_;
    std::size_t sources_ = 0;
    std::map<std::pair<std::string, std::string>, ConstraintProfile> profiles_;
    std::map<std::pair<std::string, std::string>, DistanceRow> rows_;
    std::vector<std::string> warnings_;
};

}  // namespace rccmerge

#endif  // RCCMERGE_DISTANCE_HPP
