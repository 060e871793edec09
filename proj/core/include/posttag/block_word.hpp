#ifndef POSTTAG_BLOCK_WORD_HPP
#define POSTTAG_BLOCK_WORD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posttag {

/// Symbols of building-block rows. Enumerator order is the canonical order
/// 0 < 1 < u < v < w used for sorting and serialization.
enum class BlockSymbol : std::uint8_t { Zero, One, U, V, W };

inline constexpr BlockSymbol kBlockSymbols[] = {BlockSymbol::Zero, BlockSymbol::One, BlockSymbol::U,
                                                BlockSymbol::V, BlockSymbol::W};

[[nodiscard]] constexpr bool is_literal(BlockSymbol s) noexcept {
    return s == BlockSymbol::Zero || s == BlockSymbol::One;
}

[[nodiscard]] char to_char(BlockSymbol s) noexcept;

/// Throws ParseError for characters outside {0,1,u,v,w}.
[[nodiscard]] BlockSymbol block_symbol_from_char(char ch);

/// A word over {v,u,w,0,1}.
class BlockWord {
public:
    BlockWord() = default;
    explicit BlockWord(std::vector<BlockSymbol> symbols) : symbols_(std::move(symbols)) {}

    /// Throws ParseError on characters outside {0,1,u,v,w}.
    static BlockWord parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] BlockSymbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    [[nodiscard]] std::span<const BlockSymbol> symbols() const noexcept { return symbols_; }

    void push_back(BlockSymbol s) { symbols_.push_back(s); }
    void pop_back() { symbols_.pop_back(); }
    void append(const BlockWord& other) { symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end()); }

    [[nodiscard]] std::string to_string() const;

    /// Canonical lexicographic order over 0 < 1 < u < v < w.
    friend auto operator<=>(const BlockWord&, const BlockWord&) = default;
    friend bool operator==(const BlockWord&, const BlockWord&) = default;

private:
    std::vector<BlockSymbol> symbols_;
};

[[nodiscard]] BlockWord operator+(BlockWord lhs, const BlockWord& rhs);

/// Number of positions holding `symbol`.
[[nodiscard]] std::size_t count(const BlockWord& word, BlockSymbol symbol) noexcept;

/// count(word, 0) + count(word, 1).
[[nodiscard]] std::size_t literal_count(const BlockWord& word) noexcept;

/// Membership in B = {e,v,vv}{0,1}{uu0,uu1}*{e,w,ww}.
[[nodiscard]] bool in_language(const BlockWord& word) noexcept;

/**
 * The converting set of `word`: every member of B of the same length that
 * agrees with `word` position by position under
 *   0 -> {0,u,v,w}, 1 -> {1,u,v,w}, w -> {u,w}, v -> {v}, u -> {u}.
 * Enumerated on the product of these choices with the recognizer of B, so
 * the work is proportional to the output. Sorted canonically.
 */
[[nodiscard]] std::vector<BlockWord> converting_set(const BlockWord& word);

/// Size of the converting set, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t converting_set_size(const BlockWord& word) noexcept;

/// Drops v, u, w and rewrites 0 -> 00, 1 -> 1101.
[[nodiscard]] BlockWord expand_literals(const BlockWord& word);

/// Same as expand_literals, for a bare sequence of literals.
[[nodiscard]] BlockWord expand_literals(std::span<const BlockSymbol> literals);

/// Replacement options of one source symbol, in canonical order.
[[nodiscard]] std::span<const BlockSymbol> replacement_choices(BlockSymbol source) noexcept;

namespace detail {

/// States of the deterministic recognizer of B.
enum class BState : std::uint8_t {
    Start,    // nothing read
    OneV,     // v
    TwoV,     // vv
    Literal,  // prefix, literal, complete uu-groups (accepting)
    OneU,     // ... u
    TwoU,     // ... uu
    OneW,     // ... w (accepting)
    TwoW,     // ... ww (accepting)
    Dead,
};

inline constexpr std::size_t kBStateCount = 9;

[[nodiscard]] BState transition(BState state, BlockSymbol symbol) noexcept;
[[nodiscard]] bool accepting(BState state) noexcept;

/// Number of B-paths per recognizer state after reading all prefixes of
/// `word` through the replacement choices. Saturating.
using StateCounts = std::array<std::uint64_t, kBStateCount>;

[[nodiscard]] StateCounts initial_counts() noexcept;
[[nodiscard]] StateCounts feed(const StateCounts& counts, BlockSymbol source) noexcept;
[[nodiscard]] std::uint64_t accepted(const StateCounts& counts) noexcept;
[[nodiscard]] bool all_dead(const StateCounts& counts) noexcept;

} // namespace detail

} // namespace posttag

#endif // POSTTAG_BLOCK_WORD_HPP
