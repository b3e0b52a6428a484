#ifndef RCCMERGE_RCC5_HPP
#define RCCMERGE_RCC5_HPP

#include "rccmerge/semantics.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rccmerge {

enum class Base : std::uint8_t { DR = 0, PO = 1, PP = 2, PPi = 3, EQ = 4 };

inline constexpr std::array<Base, 5> all_bases{Base::DR, Base::PO, Base::PP, Base::PPi, Base::EQ};

const char* to_string(Base b);
/// Accepts the five symbols exactly; throws std::invalid_argument otherwise.
Base parse_base(std::string_view s);

/// Set of base relations, stored as five bits. Ordering compares the bit
/// patterns, which gives a fixed total order for tie-breaking.
class Relation {
public:
    constexpr Relation() = default;
    constexpr Relation(std::initializer_list<Base> bases)
    {
        for (Base b : bases)
            bits_ |= bit(b);
    }

    static constexpr Relation from_bits(std::uint8_t bits)
    {
        Relation r;
        r.bits_ = bits & 0x1f;
        return r;
    }
    static constexpr Relation empty() { return Relation{}; }
    static constexpr Relation full() { return from_bits(0x1f); }

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool contains(Base b) const { return (bits_ & bit(b)) != 0; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool is_full() const { return bits_ == 0x1f; }
    constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
    int size() const;
    /// The only member of a singleton; throws std::logic_error otherwise.
    Base single() const;
    std::vector<Base> bases() const;

    constexpr bool subset_of(Relation o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr Relation operator|(Relation o) const { return from_bits(bits_ | o.bits_); }
    constexpr Relation operator&(Relation o) const { return from_bits(bits_ & o.bits_); }
    constexpr Relation operator-(Relation o) const { return from_bits(bits_ & ~o.bits_); }
    Relation& operator|=(Relation o) { bits_ |= o.bits_; return *this; }
    Relation& operator&=(Relation o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const Relation&) const = default;

private:
    static constexpr std::uint8_t bit(Base b) { return std::uint8_t(1u << static_cast<unsigned>(b)); }
    std::uint8_t bits_ = 0;
};

/// "{PP,EQ}" style, members in base order; "{}" for the empty relation.
std::string to_string(Relation r);
/// Inverse of to_string for a list of symbols.
Relation relation_of(const std::vector<std::string>& symbols);

Base converse(Base b);
Relation converse(Relation r);

using CompositionTable = std::array<std::array<Relation, 5>, 5>;

/// The shipped weak-composition table, indexed by Base.
const CompositionTable& composition_table();
Relation compose(Base a, Base b);
Relation compose(Relation a, Relation b);

/// Base relation between two non-empty point sets.
Base base_between(PointSet x, PointSet y);

/// Recomputes the composition table by enumerating all triples of
/// non-empty subsets of a universe of the given size.
CompositionTable derive_composition_table(std::size_t universe_size);

}  // namespace rccmerge

#endif  // RCCMERGE_RCC5_HPP
