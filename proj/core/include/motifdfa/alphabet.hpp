#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace motifdfa {

/// Set of symbol ranks of an alphabet with at most 64 symbols.
class SymbolSet {
public:
    constexpr SymbolSet() = default;
    constexpr explicit SymbolSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr SymbolSet single(std::size_t rank) { return SymbolSet{std::uint64_t{1} << rank}; }

    constexpr bool contains(std::size_t rank) const { return rank < 64 && ((bits_ >> rank) & 1U) != 0; }
    constexpr void insert(std::size_t rank) { bits_ |= std::uint64_t{1} << rank; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr SymbolSet operator|(SymbolSet o) const { return SymbolSet{bits_ | o.bits_}; }
    constexpr SymbolSet operator&(SymbolSet o) const { return SymbolSet{bits_ & o.bits_}; }
    constexpr SymbolSet operator~() const { return SymbolSet{~bits_}; }
    constexpr bool operator==(const SymbolSet&) const = default;

    /// Calls fn(rank) for each member in ascending rank order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
            fn(static_cast<std::size_t>(std::countr_zero(rest)));
        }
    }

private:
    std::uint64_t bits_ = 0;
};

/// An ordered set of distinct printable characters. The position of a
/// symbol in the declaration is its rank; all automata index transitions by
/// rank.
class Alphabet {
public:
    static constexpr std::size_t max_size = 64;

    /// Throws std::invalid_argument when empty, oversized, or when a
    /// symbol repeats or is not a graphic ASCII character.
    explicit Alphabet(std::string_view symbols);

    /// {A,C,G,T}, the alphabet fixed by IUPAC pattern mode.
    static Alphabet dna();

    std::size_t size() const { return symbols_.size(); }
    char symbol(std::size_t rank) const { return symbols_[rank]; }
    const std::string& symbols() const { return symbols_; }

    std::optional<std::size_t> rank(char c) const {
        const auto r = rank_[static_cast<unsigned char>(c)];
        if (r < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(r);
    }
    bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }

    SymbolSet all() const;

    /// Symbols of a set in rank order, e.g. "ABD".
    std::string spell(SymbolSet set) const;

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::string symbols_;
    std::array<std::int8_t, 256> rank_{};
};

}  // namespace motifdfa
