#ifndef POSTTAG_MOD3_HPP
#define POSTTAG_MOD3_HPP

#include "posttag/binary_word.hpp"

#include <cstdint>

namespace posttag {

/// An integer residue modulo 3, always held in {0,1,2}.
class Mod3Residue {
public:
    constexpr Mod3Residue() = default;
    /// Reduces any integer, negative ones included: Mod3Residue(-1) == 2.
    constexpr explicit Mod3Residue(std::int64_t value)
        : value_(static_cast<std::uint8_t>(((value % 3) + 3) % 3)) {}

    [[nodiscard]] constexpr unsigned value() const noexcept { return value_; }

    constexpr Mod3Residue operator-() const noexcept { return Mod3Residue(-static_cast<std::int64_t>(value_)); }
    friend constexpr Mod3Residue operator+(Mod3Residue a, Mod3Residue b) noexcept {
        return Mod3Residue(static_cast<std::int64_t>(a.value_) + b.value_);
    }
    friend constexpr Mod3Residue operator-(Mod3Residue a, Mod3Residue b) noexcept {
        return Mod3Residue(static_cast<std::int64_t>(a.value_) - b.value_);
    }
    friend constexpr bool operator==(Mod3Residue, Mod3Residue) = default;

private:
    std::uint8_t value_ = 0;
};

/// Length of the word modulo 3.
[[nodiscard]] Mod3Residue length_residue(const BinaryWord& word) noexcept;

/// The word without its first `x` symbols. Throws WordTooShort.
[[nodiscard]] BinaryWord cut(const BinaryWord& word, Mod3Residue x);

/// Samples positions 0, 3, 6, ... and replaces each sampled 1 by 1101 and
/// each sampled 0 by 00.
[[nodiscard]] BinaryWord sample_expand(const BinaryWord& word);

/// Runs the tag system until every symbol of `word` has been deleted, i.e.
/// ceil(|word| / 3) steps. Requires |word| >= 4 (throws WordTooShort).
[[nodiscard]] BinaryWord full_pass_simulated(const BinaryWord& word);

/// Closed form of the same map: sample_expand(word) cut by -length_residue(word).
/// Requires |word| >= 4 (throws WordTooShort).
[[nodiscard]] BinaryWord full_pass_algebraic(const BinaryWord& word);

/// Number of tag steps a full pass over a word of this length takes.
[[nodiscard]] constexpr std::uint64_t full_pass_steps(std::uint64_t length) noexcept {
    return (length + 2) / 3;
}

} // namespace posttag

#endif // POSTTAG_MOD3_HPP
