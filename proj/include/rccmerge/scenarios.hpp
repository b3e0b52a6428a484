#ifndef RCCMERGE_SCENARIOS_HPP
#define RCCMERGE_SCENARIOS_HPP

#include "rccmerge/qcn.hpp"

namespace rccmerge {

/// A single base relation, {PP,EQ} or {PPi,EQ}.
bool is_scenario_label(Relation r);

/// Quasi-atomic network: every off-diagonal label satisfies
/// is_scenario_label and no variable is empty.
class Scenario {
public:
    /// Throws std::invalid_argument if the network is not quasi-atomic.
    explicit Scenario(Qcn network);

    const Qcn& network() const { return net_; }
    const std::vector<std::string>& variables() const { return net_.variables(); }
    Relation at(std::size_t i, std::size_t j) const { return net_.at(i, j); }
    Relation at(const std::string& a, const std::string& b) const { return net_.at(a, b); }

    /// Labels in canonical pair order; the key used for sorting and ties.
    std::vector<Relation> canonical_labels() const;

    friend bool operator==(const Scenario& a, const Scenario& b) = default;

private:
    Qcn net_;
};

/// Consistent quasi-atomic refinements of n that are maximal among those
/// refining its minimal network, sorted by canonical_labels. Empty iff n
/// is inconsistent.
std::vector<Scenario> enumerate_scenarios(const Qcn& n);

}  // namespace rccmerge

#endif  // RCCMERGE_SCENARIOS_HPP
