#include "rccmerge/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rccmerge {

namespace {

const Relation pp_eq{Base::PP, Base::EQ};
const Relation ppi_eq{Base::PPi, Base::EQ};

// Maximal scenario labels contained in r. They are pairwise incomparable.
std::vector<Relation> maximal_labels(Relation r)
{
    std::vector<Relation> out;
    if (r.contains(Base::DR))
        out.push_back(Relation{Base::DR});
    if (r.contains(Base::PO))
        out.push_back(Relation{Base::PO});
    bool has_pp_eq = pp_eq.subset_of(r);
    bool has_ppi_eq = ppi_eq.subset_of(r);
    if (has_pp_eq)
        out.push_back(pp_eq);
    else if (r.contains(Base::PP))
        out.push_back(Relation{Base::PP});
    if (has_ppi_eq)
        out.push_back(ppi_eq);
    else if (r.contains(Base::PPi))
        out.push_back(Relation{Base::PPi});
    if (r.contains(Base::EQ) && !has_pp_eq && !has_ppi_eq)
        out.push_back(Relation{Base::EQ});
    return out;
}

}  // namespace

bool is_scenario_label(Relation r)
{
    return r.is_singleton() || r == pp_eq || r == ppi_eq;
}

Scenario::Scenario(Qcn network) : net_(std::move(network))
{
    const std::size_t n = net_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (net_.at(i, i).is_empty())
            throw std::invalid_argument("scenario variable '" + net_.variable(i) + "' is empty");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_scenario_label(net_.at(i, j)))
                throw std::invalid_argument("constraint " + to_string(net_.at(i, j)) + " between '"
                                            + net_.variable(i) + "' and '" + net_.variable(j)
                                            + "' is not quasi-atomic");
    }
}

std::vector<Relation> Scenario::canonical_labels() const
{
    std::vector<Relation> out;
    for (auto [i, j] : net_.canonical_pairs())
        out.push_back(net_.at(i, j));
    return out;
}

std::vector<Scenario> enumerate_scenarios(const Qcn& n)
{
    Qcn minimal = minimal_network(n);
    if (minimal.has_empty_constraint())
        return {};

    const auto pairs = minimal.canonical_pairs();
    std::vector<std::vector<Relation>> options;
    for (auto [i, j] : pairs)
        options.push_back(maximal_labels(minimal.at(i, j)));

    std::vector<Qcn> found;
    std::function<void(std::size_t, const Qcn&)> extend = [&](std::size_t k, const Qcn& current) {
        if (k == pairs.size()) {
            if (is_consistent(current))
                found.push_back(current);
            return;
        }
        auto [i, j] = pairs[k];
        for (Relation label : options[k]) {
            Qcn next = current;
            next.set(i, j, label);
            if (algebraic_closure(next).has_empty_constraint())
                continue;
            extend(k + 1, next);
        }
    };
    extend(0, minimal);

    std::vector<Scenario> out;
    for (std::size_t a = 0; a < found.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < found.size() && !dominated; ++b)
            dominated = b != a && found[a] != found[b] && found[a].subset_of(found[b]);
        if (!dominated)
            out.emplace_back(found[a]);
    }
    std::sort(out.begin(), out.end(), [](const Scenario& x, const Scenario& y) {
        return x.canonical_labels() < y.canonical_labels();
    });
    return out;
}

}  // namespace rccmerge
