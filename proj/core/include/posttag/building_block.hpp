#ifndef POSTTAG_BUILDING_BLOCK_HPP
#define POSTTAG_BUILDING_BLOCK_HPP

#include "posttag/block_word.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace posttag {

/// Ordered rows b_1 ... b_(n+1), each a member of B.
struct BuildingBlock {
    std::vector<BlockWord> rows;

    friend auto operator<=>(const BuildingBlock&, const BuildingBlock&) = default;
    friend bool operator==(const BuildingBlock&, const BuildingBlock&) = default;
};

/// One row per line.
[[nodiscard]] std::string to_string(const BuildingBlock& block);

/// How a block was produced: an initial-block construction, then zero or
/// more right extensions, each identified by its appended suffix.
struct Provenance {
    struct Origin {
        BlockWord seed;
        unsigned depth = 0;
        friend bool operator==(const Origin&, const Origin&) = default;
    };
    std::optional<Origin> origin;
    std::vector<BlockWord> extensions;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ConditionReport {
    bool cond_i = false;   // initial block plus extensions
    bool cond_ii = false;  // first row equals last row
    bool cond_iii = false; // c(b_i, w) + c(b_(i+1), v) = 2 for every adjacent pair
    bool cond_iv = false;  // some b_i (i <= n) has no v

    [[nodiscard]] bool search_goal() const noexcept { return cond_ii && cond_iii && cond_iv; }
    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

[[nodiscard]] ConditionReport check_conditions(const BuildingBlock& block, const Provenance& provenance);

/// True for words of the form {e,v,vv}{0,1}{e,w,ww}.
[[nodiscard]] bool is_initial_seed(const BlockWord& seed) noexcept;

/// All 18 initial seeds in canonical order.
[[nodiscard]] std::vector<BlockWord> initial_seeds();

/**
 * Initial-block construction from `seed`, branching over every choice.
 *
 * Level i replaces the pending word with each member b_i of its converting
 * set; a branch whose b_i has no literal dies, otherwise the next pending
 * word is expand_literals(b_i). After `depth` levels one more replacement
 * gives the last row, so every block has depth + 1 rows.
 *
 * Throws InvalidSeed when the seed is not an initial seed and
 * std::invalid_argument when depth == 0. Result is sorted and unique.
 */
[[nodiscard]] std::vector<BuildingBlock> create_initial_blocks(const BlockWord& seed, unsigned depth);

struct ExtendOptions {
    /// Longest suffix tried for the first row.
    std::size_t max_suffix_length = 6;
};

struct Extension {
    BuildingBlock block;
    BlockWord suffix;

    friend auto operator<=>(const Extension&, const Extension&) = default;
    friend bool operator==(const Extension&, const Extension&) = default;
};

/// Binary suffixes s (1 <= |s| <= max_suffix_length) whose first-row
/// converting set B(b_1 s) is a single word carrying exactly one more
/// literal than b_1. Canonical order.
[[nodiscard]] std::vector<BlockWord> extension_suffixes(const BlockWord& first_row,
                                                        const ExtendOptions& options = {});

/**
 * Right extension of a block, branching over every choice.
 *
 * For every qualifying suffix, row i (starting at the first) gets the
 * pending suffix appended and is replaced by each member of its converting
 * set. Literals of the appended part that survive the replacement are
 * expanded into the pending suffix of the next row; when none survive, or
 * the last row has been rewritten, the branch yields a block. Branches
 * with an empty converting set yield nothing.
 *
 * Throws NoExtension when no suffix qualifies. Result sorted by
 * (block, suffix) and unique.
 */
[[nodiscard]] std::vector<Extension> extend_right(const BuildingBlock& block, const ExtendOptions& options = {});

} // namespace posttag

#endif // POSTTAG_BUILDING_BLOCK_HPP
