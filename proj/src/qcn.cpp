#include "rccmerge/qcn.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace rccmerge {

Qcn::Qcn(std::vector<std::string> variables) : names_(std::move(variables))
{
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
    rel_.assign(n * n, Relation::full());
    for (std::size_t i = 0; i < n; ++i)
        rel_[i * n + i] = Relation{Base::EQ};
}

std::optional<std::size_t> Qcn::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Qcn::index_of(const std::string& name) const
{
    if (auto i = find(name))
        return *i;
    throw std::out_of_range("unknown variable '" + name + "'");
}

void Qcn::set(std::size_t i, std::size_t j, Relation r)
{
    const std::size_t n = names_.size();
    if (i >= n || j >= n)
        throw std::out_of_range("variable index out of range");
    if (i == j) {
        rel_[i * n + i] = r & Relation{Base::EQ};
        return;
    }
    rel_[i * n + j] = r;
    rel_[j * n + i] = converse(r);
}

std::vector<std::pair<std::size_t, std::size_t>> Qcn::canonical_pairs() const
{
    std::vector<std::size_t> order(names_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            out.emplace_back(order[a], order[b]);
    return out;
}

bool Qcn::has_empty_constraint() const
{
    return std::any_of(rel_.begin(), rel_.end(), [](Relation r) { return r.is_empty(); });
}

bool Qcn::is_atomic() const
{
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!at(i, j).is_singleton())
                return false;
    return true;
}

bool Qcn::subset_of(const Qcn& o) const
{
    if (names_ != o.names_)
        throw std::invalid_argument("networks have different variables");
    for (std::size_t k = 0; k < rel_.size(); ++k)
        if (!rel_[k].subset_of(o.rel_[k]))
            return false;
    return true;
}

Qcn Qcn::restricted_to(const std::vector<std::string>& variables) const
{
    Qcn out(variables);
    std::vector<std::size_t> idx;
    for (const auto& v : variables)
        idx.push_back(index_of(v));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a; b < idx.size(); ++b)
            out.set(a, b, at(idx[a], idx[b]));
    return out;
}

Qcn algebraic_closure(Qcn net)
{
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i)
        if (net.at(i, i).is_empty())
            for (std::size_t j = 0; j < n; ++j)
                net.set(i, j, Relation::empty());

    std::deque<std::pair<std::size_t, std::size_t>> queue;
    std::vector<char> queued(n * n, 0);
    auto push = [&](std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        if (!queued[i * n + j]) {
            queued[i * n + j] = 1;
            queue.emplace_back(i, j);
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            push(i, j);

    auto revise = [&](std::size_t a, std::size_t b, Relation via) {
        Relation old = net.at(a, b);
        Relation now = old & via;
        if (now != old) {
            net.set(a, b, now);
            push(a, b);
        }
    };

    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        queued[i * n + j] = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j)
                continue;
            revise(i, k, compose(net.at(i, j), net.at(j, k)));
            revise(k, j, compose(net.at(k, i), net.at(i, j)));
        }
    }
    return net;
}

std::optional<Qcn> find_solution(const Qcn& start)
{
    Qcn net = algebraic_closure(start);
    if (net.has_empty_constraint())
        return std::nullopt;
    const std::size_t n = net.size();
    std::size_t best_i = n, best_j = n;
    int best = 6;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int s = net.at(i, j).size();
            if (s > 1 && s < best) {
                best = s;
                best_i = i;
                best_j = j;
            }
        }
    if (best_i == n)
        return net;
    for (Base b : net.at(best_i, best_j).bases()) {
        Qcn next = net;
        next.set(best_i, best_j, Relation{b});
        if (auto sol = find_solution(next))
            return sol;
    }
    return std::nullopt;
}

bool is_consistent(const Qcn& n)
{
    return find_solution(n).has_value();
}

Qcn minimal_network(const Qcn& start)
{
    const std::size_t n = start.size();
    Qcn realized(start.variables());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            realized.set(i, j, Relation::empty());

    auto sol = find_solution(start);
    if (!sol) {
        for (std::size_t i = 0; i < n; ++i)
            realized.set(i, i, Relation::empty());
        return realized;
    }
    auto absorb = [&](const Qcn& s) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                realized.set(i, j, realized.at(i, j) | s.at(i, j));
    };
    absorb(*sol);

    Qcn closed = algebraic_closure(start);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Base b : closed.at(i, j).bases()) {
                if (realized.at(i, j).contains(b))
                    continue;
                Qcn probe = closed;
                probe.set(i, j, Relation{b});
                if (auto s = find_solution(probe))
                    absorb(*s);
            }
    return realized;
}

bool satisfies(const SetInterpretation& s, const Qcn& n)
{
    if (s.regions.size() != n.size())
        return false;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (s.regions[i] == 0 || (s.regions[i] & ~all_points(s.universe_size)) != 0)
            return false;
        for (std::size_t j = i; j < n.size(); ++j)
            if (!n.at(i, j).contains(base_between(s.regions[i], s.regions[j])))
                return false;
    }
    return true;
}

std::optional<SetInterpretation> find_set_model(const Qcn& n, std::size_t universe_size)
{
    if (universe_size == 0 || universe_size > 20)
        throw std::invalid_argument("universe size must be between 1 and 20");
    SetInterpretation s{universe_size, std::vector<PointSet>(n.size(), 0)};
    const PointSet top = all_points(universe_size);

    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
        if (k == n.size())
            return true;
        if (n.at(k, k).is_empty())
            return false;
        for (PointSet x = 1; x <= top; ++x) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                ok = n.at(j, k).contains(base_between(s.regions[j], x));
            if (!ok)
                continue;
            s.regions[k] = x;
            if (assign(k + 1))
                return true;
        }
        return false;
    };
    if (assign(0))
        return s;
    return std::nullopt;
}

}  // namespace rccmerge
