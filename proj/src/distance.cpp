#include "rccmerge/distance.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rccmerge {

namespace {

using Matrix = std::array<std::array<int, 5>, 5>;

Matrix shortest_paths()
{
    const std::array<std::pair<Base, Base>, 5> edges{{
        {Base::DR, Base::PO},
        {Base::PO, Base::PP},
        {Base::PO, Base::PPi},
        {Base::PP, Base::EQ},
        {Base::PPi, Base::EQ},
    }};
    std::array<std::vector<int>, 5> adj;
    for (auto [a, b] : edges) {
        adj[static_cast<int>(a)].push_back(static_cast<int>(b));
        adj[static_cast<int>(b)].push_back(static_cast<int>(a));
    }
    Matrix d;
    for (int s = 0; s < 5; ++s) {
        d[s].fill(-1);
        d[s][s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return d;
}

const Matrix& distances()
{
    static const Matrix d = shortest_paths();
    return d;
}

}  // namespace

int base_distance(Base a, Base b)
{
    return distances()[static_cast<int>(a)][static_cast<int>(b)];
}

int constraint_distance(Base b, Relation r)
{
    int best = 0;
    bool any = false;
    for (Base x : r.bases()) {
        int d = base_distance(b, x);
        if (!any || d < best)
            best = d;
        any = true;
    }
    return best;
}

int profile_distance(Base b, const ConstraintProfile& e)
{
    int sum = 0;
    for (Relation r : e.entries)
        sum += constraint_distance(b, r);
    return sum;
}

DistanceTable::DistanceTable(const std::vector<Qcn>& profile)
{
    if (profile.empty())
        throw std::invalid_argument("distance table needs at least one network");
    variables_ = profile.front().variables();
    sources_ = profile.size();
    std::vector<std::string> sorted = variables_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k < profile.size(); ++k) {
        std::vector<std::string> other = profile[k].variables();
        std::sort(other.begin(), other.end());
        if (other != sorted)
            throw std::invalid_argument("network " + std::to_string(k + 1)
                                        + " does not have the same variables as network 1");
    }

    for (auto [i, j] : profile.front().canonical_pairs()) {
        const std::string& a = variables_[i];
        const std::string& b = variables_[j];
        ConstraintProfile e{a, b, {}};
        for (std::size_t k = 0; k < profile.size(); ++k) {
            Relation r = profile[k].at(a, b);
            if (r.is_empty())
                warnings_.push_back("source " + std::to_string(k + 1) + " has an empty constraint on (" + a
                                    + ", " + b + "); it counts as distance 0");
            e.entries.push_back(r);
        }
        DistanceRow row;
        for (Base base : all_bases)
            row[static_cast<int>(base)] = profile_distance(base, e);
        profiles_.emplace(std::make_pair(a, b), std::move(e));
        rows_.emplace(std::make_pair(a, b), row);
    }
}

std::pair<std::string, std::string> DistanceTable::key(const std::string& a, const std::string& b) const
{
    auto k = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (a == b || !rows_.count(k))
        throw std::out_of_range("no distance row for pair (" + a + ", " + b + ")");
    return k;
}

ConstraintProfile DistanceTable::profile(const std::string& a, const std::string& b) const
{
    ConstraintProfile e = profiles_.at(key(a, b));
    if (b < a) {
        std::swap(e.first, e.second);
        for (Relation& r : e.entries)
            r = converse(r);
    }
    return e;
}

int DistanceTable::distance(const std::string& a, const std::string& b, Base base) const
{
    const DistanceRow& row = rows_.at(key(a, b));
    return a < b ? row[static_cast<int>(base)] : row[static_cast<int>(converse(base))];
}

DistanceRow DistanceTable::row(const std::string& a, const std::string& b) const
{
    DistanceRow out;
    for (Base base : all_bases)
        out[static_cast<int>(base)] = distance(a, b, base);
    return out;
}

std::vector<std::pair<std::string, std::string>> DistanceTable::pairs() const
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, _] : rows_)
        out.push_back(k);
    return out;
}

}  // namespace rccmerge
