#ifndef POSTTAG_BLOCK_SEARCH_HPP
#define POSTTAG_BLOCK_SEARCH_HPP

#include "posttag/building_block.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace posttag {

struct SearchOptions {
    /// Initial blocks with 2 .. max_rows rows are explored.
    unsigned max_rows = 2;
    /// Number of distinct blocks visited before the search stops.
    std::uint64_t budget = 100;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 1;
    ExtendOptions extend;
};

struct SearchHit {
    BuildingBlock block;
    Provenance provenance;
    ConditionReport report;
};

struct SearchResult {
    /// Blocks meeting conditions (ii)-(iv), sorted by block.
    std::vector<SearchHit> hits;
    std::uint64_t nodes_visited = 0;
    /// Visited blocks whose descendants were skipped.
    std::uint64_t nodes_pruned = 0;
    /// True when the budget ran out with unvisited blocks left.
    bool budget_exhausted = false;
};

/**
 * Whether any block reachable by right extensions could still meet
 * condition (iv). Extensions never remove a v from a row, so once every
 * row but the last holds a v the condition is lost for good.
 */
[[nodiscard]] bool may_reach_goal(const BuildingBlock& block) noexcept;

/**
 * Breadth-first search over every initial block (all seeds, depths
 * 1 .. max_rows - 1) and their repeated right extensions.
 *
 * Blocks are deduplicated on first discovery; a block is visited (and
 * counted against the budget) once. Blocks failing may_reach_goal are
 * reported but not extended. Each BFS level is expanded in parallel and
 * merged in a fixed order, so the result does not depend on the thread
 * count.
 */
[[nodiscard]] SearchResult search(const SearchOptions& options);

/// `key = value` document listing the options, totals and every hit with
/// its rows, provenance and condition flags. Thread count is not recorded.
[[nodiscard]] std::string render_search_document(const SearchOptions& options, const SearchResult& result);

} // namespace posttag

#endif // POSTTAG_BLOCK_SEARCH_HPP
