#ifndef RCCMERGE_QCN_HPP
#define RCCMERGE_QCN_HPP

#include "rccmerge/rcc5.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rccmerge {

/// Qualitative constraint network over named variables. Every ordered pair
/// carries a relation and the converse pair always carries its converse.
/// The diagonal is {EQ} unless a variable is known to be empty, in which
/// case it is the empty relation.
class Qcn {
public:
    Qcn() = default;
    /// All pairs unconstrained. Throws std::invalid_argument on duplicate names.
    explicit Qcn(std::vector<std::string> variables);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& variables() const { return names_; }
    const std::string& variable(std::size_t i) const { return names_.at(i); }
    /// Throws std::out_of_range for an unknown name.
    std::size_t index_of(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;

    Relation at(std::size_t i, std::size_t j) const { return rel_[i * names_.size() + j]; }
    Relation at(const std::string& a, const std::string& b) const { return at(index_of(a), index_of(b)); }

    /// Sets (i,j) and its converse. On the diagonal only EQ can survive.
    void set(std::size_t i, std::size_t j, Relation r);
    void set(const std::string& a, const std::string& b, Relation r) { set(index_of(a), index_of(b), r); }
    /// Intersects (i,j) with r, keeping the converse in step.
    void constrain(std::size_t i, std::size_t j, Relation r) { set(i, j, at(i, j) & r); }

    /// Unordered pairs as (i,j) with variable(i) < variable(j) by name,
    /// sorted by (variable(i), variable(j)).
    std::vector<std::pair<std::size_t, std::size_t>> canonical_pairs() const;

    bool has_empty_constraint() const;
    /// Every off-diagonal constraint is a single base relation.
    bool is_atomic() const;
    /// Pointwise inclusion; both networks must have the same variables.
    bool subset_of(const Qcn& o) const;
    /// The same network restricted to (and ordered by) the given variables.
    Qcn restricted_to(const std::vector<std::string>& variables) const;

    friend bool operator==(const Qcn& a, const Qcn& b) = default;

private:
    std::vector<std::string> names_;
    std::vector<Relation> rel_;
};

/// Path consistency: refines every (u,w) by the composition through every v
/// until nothing changes. An empty constraint in the result means the
/// network has no solution.
Qcn algebraic_closure(Qcn n);

/// Some atomic refinement that is algebraically closed, if any; this is a
/// solution of the network.
std::optional<Qcn> find_solution(const Qcn& n);
bool is_consistent(const Qcn& n);

/// Keeps in each constraint exactly the base relations that occur in some
/// solution. An inconsistent network yields all-empty constraints.
Qcn minimal_network(const Qcn& n);

/// Regions for the variables of a network, as non-empty subsets of a
/// universe {0, ..., universe_size-1}.
struct SetInterpretation {
    std::size_t universe_size = 0;
    std::vector<PointSet> regions;
};

bool satisfies(const SetInterpretation& s, const Qcn& n);

/// Exhaustive search over non-empty subsets. Exponential; intended for
/// small networks.
std::optional<SetInterpretation> find_set_model(const Qcn& n, std::size_t universe_size);

}  // namespace rccmerge

#endif  // RCCMERGE_QCN_HPP
