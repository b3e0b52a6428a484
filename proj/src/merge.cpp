#include "rccmerge/merge.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rccmerge {

Relation relax(Relation phi, const std::string& a, const std::string& b, const DistanceTable& table)
{
    Relation outside = Relation::full() - phi;
    if (outside.is_empty())
        return phi;
    int best = -1;
    for (Base x : outside.bases()) {
        int d = table.distance(a, b, x);
        if (best < 0 || d < best)
            best = d;
    }
    Relation out = phi;
    for (Base x : outside.bases())
        if (table.distance(a, b, x) == best)
            out |= Relation{x};
    return out;
}

int val(Relation phi, const std::string& a, const std::string& b, const DistanceTable& table)
{
    if (phi.is_empty())
        throw std::invalid_argument("val is undefined for the empty relation");
    int best = 0;
    for (Base x : phi.bases())
        best = std::max(best, table.distance(a, b, x));
    return best;
}

MergeResult merge(const std::vector<Qcn>& profile)
{
    return merge(DistanceTable(profile));
}

MergeResult merge(const DistanceTable& table)
{
    Qcn net(table.variables());
    const auto pairs = table.pairs();
    for (const auto& [a, b] : pairs)
        net.set(a, b, relax(Relation::empty(), a, b, table));

    MergeResult result{net, MergeTrace{net, {}}, table};
    while (!is_consistent(net)) {
        int top = -1;
        for (const auto& [a, b] : pairs) {
            Relation r = net.at(a, b);
            if (!r.is_full())
                top = std::max(top, val(r, a, b, table));
        }
        // The all-full network is consistent, so something is left to relax.
        assert(top >= 0);
        if (top < 0)
            throw std::logic_error("merge: inconsistent network without relaxable constraints");

        MergeStep step;
        step.val = top;
        Qcn next = net;
        for (const auto& [a, b] : pairs) {
            Relation r = net.at(a, b);
            if (!r.is_full() && val(r, a, b, table) == top) {
                next.set(a, b, relax(r, a, b, table));
                step.relaxed.emplace_back(a, b);
            }
        }
        net = next;
        step.snapshot = net;
        result.trace.iterations.push_back(std::move(step));
    }
    result.merged = net;
    return result;
}

}  // namespace rccmerge
