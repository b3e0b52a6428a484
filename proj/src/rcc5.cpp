#include "rccmerge/rcc5.hpp"

#include <bit>
#include <stdexcept>

namespace rccmerge {

const char* to_string(Base b)
{
    switch (b) {
    case Base::DR: return "DR";
    case Base::PO: return "PO";
    case Base::PP: return "PP";
    case Base::PPi: return "PPi";
    case Base::EQ: return "EQ";
    }
    return "?";
}

Base parse_base(std::string_view s)
{
    for (Base b : all_bases)
        if (s == to_string(b))
            return b;
    throw std::invalid_argument("unknown RCC-5 base relation '" + std::string(s) + "'");
}

int Relation::size() const
{
    return std::popcount(bits_);
}

Base Relation::single() const
{
    if (!is_singleton())
        throw std::logic_error("relation " + to_string(*this) + " is not a singleton");
    return static_cast<Base>(std::countr_zero(bits_));
}

std::vector<Base> Relation::bases() const
{
    std::vector<Base> out;
    for (Base b : all_bases)
        if (contains(b))
            out.push_back(b);
    return out;
}

std::string to_string(Relation r)
{
    std::string out = "{";
    bool first = true;
    for (Base b : r.bases()) {
        if (!first)
            out += ",";
        out += to_string(b);
        first = false;
    }
    return out + "}";
}

Relation relation_of(const std::vector<std::string>& symbols)
{
    Relation r;
    for (const auto& s : symbols)
        r |= Relation{parse_base(s)};
    return r;
}

Base converse(Base b)
{
    if (b == Base::PP)
        return Base::PPi;
    if (b == Base::PPi)
        return Base::PP;
    return b;
}

Relation converse(Relation r)
{
    Relation out = r - Relation{Base::PP, Base::PPi};
    if (r.contains(Base::PP))
        out |= Relation{Base::PPi};
    if (r.contains(Base::PPi))
        out |= Relation{Base::PP};
    return out;
}

namespace {

using B = Base;

const Relation all = Relation::full();

// Rows: first argument, columns: second argument, both in DR, PO, PP, PPi, EQ order.
const CompositionTable shipped_table = {{
    {{all, {B::DR, B::PO, B::PP}, {B::DR, B::PO, B::PP}, {B::DR}, {B::DR}}},
    {{{B::DR, B::PO, B::PPi}, all, {B::PO, B::PP}, {B::DR, B::PO, B::PPi}, {B::PO}}},
    {{{B::DR}, {B::DR, B::PO, B::PP}, {B::PP}, all, {B::PP}}},
    {{{B::DR, B::PO, B::PPi}, {B::PO, B::PPi}, {B::PO, B::PP, B::PPi, B::EQ}, {B::PPi}, {B::PPi}}},
    {{{B::DR}, {B::PO}, {B::PP}, {B::PPi}, {B::EQ}}},
}};

struct RelationComposition {
    std::array<std::array<Relation, 32>, 32> table;
    RelationComposition()
    {
        for (unsigned a = 0; a < 32; ++a)
            for (unsigned b = 0; b < 32; ++b) {
                Relation out;
                for (Base x : Relation::from_bits(a).bases())
                    for (Base y : Relation::from_bits(b).bases())
                        out |= shipped_table[static_cast<int>(x)][static_cast<int>(y)];
                table[a][b] = out;
            }
    }
};

const RelationComposition& relation_composition()
{
    static const RelationComposition rc;
    return rc;
}

}  // namespace

const CompositionTable& composition_table()
{
    return shipped_table;
}

Relation compose(Base a, Base b)
{
    return shipped_table[static_cast<int>(a)][static_cast<int>(b)];
}

Relation compose(Relation a, Relation b)
{
    return relation_composition().table[a.bits()][b.bits()];
}

Base base_between(PointSet x, PointSet y)
{
    if ((x & y) == 0)
        return Base::DR;
    if (x == y)
        return Base::EQ;
    if ((x & ~y) == 0)
        return Base::PP;
    if ((y & ~x) == 0)
        return Base::PPi;
    return Base::PO;
}

CompositionTable derive_composition_table(std::size_t universe_size)
{
    if (universe_size == 0 || universe_size > 16)
        throw std::invalid_argument("universe size must be between 1 and 16");
    CompositionTable t{};
    const PointSet top = all_points(universe_size);
    for (PointSet x = 1; x <= top; ++x)
        for (PointSet y = 1; y <= top; ++y) {
            int b1 = static_cast<int>(base_between(x, y));
            for (PointSet z = 1; z <= top; ++z) {
                int b2 = static_cast<int>(base_between(y, z));
                t[b1][b2] |= Relation{base_between(x, z)};
            }
        }
    return t;
}

}  // namespace rccmerge
