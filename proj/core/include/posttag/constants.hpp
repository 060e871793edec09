#ifndef POSTTAG_CONSTANTS_HPP
#define POSTTAG_CONSTANTS_HPP

#include "posttag/binary_word.hpp"
#include "posttag/errors.hpp"
#include "posttag/mod3.hpp"
#include "posttag/tokens.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace posttag {

// The growing family is prefix^n core suffix^m.
inline constexpr std::size_t kPrefixLength = 18;
inline constexpr std::size_t kCoreLength = 2402;
inline constexpr std::size_t kSuffixLength = 54;

/// Steps from the core alone to prefix core suffix.
inline constexpr std::uint64_t kCoreGrowthSteps = 10444;

/// Aggregate step bound for one pass around the chain at n = m = 0.
inline constexpr std::uint64_t kChainStepBound = 20000;

inline constexpr std::size_t kChainLength = 14;

[[nodiscard]] const BinaryWord& growth_prefix();
[[nodiscard]] const BinaryWord& growth_core();
[[nodiscard]] const BinaryWord& growth_suffix();

/// Checks length and FNV-1a hash of the three embedded words; throws Error
/// on mismatch.
void verify_embedded_constants();

[[nodiscard]] std::uint64_t fnv1a(std::string_view text) noexcept;

/// One reference row of the chain table. Middle words are not part of the
/// table; they are derived by the chain verifier.
struct AppendixEntry {
    BinaryWord prefix;
    BinaryWord suffix;
    Mod3Residue offset;
};

/// The 14 reference (prefix, suffix, cut index) rows, decoded.
[[nodiscard]] std::vector<AppendixEntry> appendix_vectors();

} // namespace posttag

#endif // POSTTAG_CONSTANTS_HPP
