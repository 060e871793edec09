#include "posttag/block_search.hpp"

#include "posttag/errors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace posttag {

namespace {

struct Node {
    BuildingBlock block;
    Provenance provenance;
};

struct Expansion {
    ConditionReport report;
    bool pruned = false;
    std::vector<Extension> children;
};

Expansion expand(const Node& node, const ExtendOptions& options) {
    Expansion e;
    e.report = check_conditions(node.block, node.provenance);
    if (!may_reach_goal(node.block)) {
        e.pruned = true;
        return e;
    }
    try {
        e.children = extend_right(node.block, options);
    } catch (const NoExtension&) {
        // dead end in the extension graph
    }
    return e;
}

unsigned worker_count(unsigned requested, std::size_t work) {
    unsigned n = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

std::vector<Expansion> expand_level(const std::vector<Node>& level, std::size_t count, const SearchOptions& options) {
    std::vector<Expansion> out(count);
    const unsigned workers = worker_count(options.threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = expand(level[i], options.extend);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                out[i] = expand(level[i], options.extend);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return out;
}

std::string join_words(const std::vector<BlockWord>& words) {
    if (words.empty()) {
        return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += words[i].to_string();
    }
    return out;
}

} // namespace

bool may_reach_goal(const BuildingBlock& block) noexcept {
    const auto& rows = block.rows;
    if (rows.size() < 2) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (count(rows[i], BlockSymbol::V) == 0) {
            return true;
        }
    }
    return false;
}

SearchResult search(const SearchOptions& options) {
    if (options.budget == 0) {
        throw std::invalid_argument("search budget must be at least 1");
    }
    SearchResult result;
    std::set<BuildingBlock> seen;
    std::vector<Node> level;

    for (const BlockWord& seed : initial_seeds()) {
        for (unsigned depth = 1; depth + 1 <= options.max_rows; ++depth) {
            for (BuildingBlock& block : create_initial_blocks(seed, depth)) {
                if (seen.insert(block).second) {
                    level.push_back(Node{std::move(block), Provenance{Provenance::Origin{seed, depth}, {}}});
                }
            }
        }
    }

    while (!level.empty()) {
        const std::uint64_t remaining = options.budget - result.nodes_visited;
        const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, level.size()));
        const std::vector<Expansion> expanded = expand_level(level, count, options);
        result.nodes_visited += count;

        std::vector<Node> next;
        const std::uint64_t room = options.budget - result.nodes_visited;
        bool overflow = count < level.size();
        for (std::size_t i = 0; i < count; ++i) {
            const Expansion& e = expanded[i];
            if (e.report.search_goal()) {
                result.hits.push_back(SearchHit{level[i].block, level[i].provenance, e.report});
            }
            if (e.pruned) {
                ++result.nodes_pruned;
                continue;
            }
            for (const Extension& child : e.children) {
                if (seen.contains(child.block)) {
                    continue;
                }
                // Blocks past the remaining budget would never be visited.
                if (next.size() >= room) {
                    overflow = true;
                    break;
                }
                seen.insert(child.block);
                Provenance provenance = level[i].provenance;
                provenance.extensions.push_back(child.suffix);
                next.push_back(Node{child.block, std::move(provenance)});
            }
        }
        if (overflow) {
            result.budget_exhausted = true;
            break;
        }
        level = std::move(next);
    }

    std::sort(result.hits.begin(), result.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.block < b.block; });
    return result;
}

std::string render_search_document(const SearchOptions& options, const SearchResult& result) {
    std::ostringstream out;
    out << "version = 1\n";
    out << "max_rows = " << options.max_rows << '\n';
    out << "budget = " << options.budget << '\n';
    out << "max_suffix = " << options.extend.max_suffix_length << '\n';
    out << "nodes_visited = " << result.nodes_visited << '\n';
    out << "nodes_pruned = " << result.nodes_pruned << '\n';
    out << "budget_exhausted = " << (result.budget_exhausted ? "true" : "false") << '\n';
    out << "hits = " << result.hits.size() << '\n';
    for (std::size_t i = 0; i < result.hits.size(); ++i) {
        const SearchHit& hit = result.hits[i];
        const std::string key = "hit." + std::to_string(i + 1);
        out << key << ".rows = " << hit.block.rows.size() << '\n';
        for (std::size_t r = 0; r < hit.block.rows.size(); ++r) {
            out << key << ".row." << (r + 1) << " = " << hit.block.rows[r].to_string() << '\n';
        }
        if (hit.provenance.origin) {
            out << key << ".origin.seed = " << hit.provenance.origin->seed.to_string() << '\n';
            out << key << ".origin.depth = " << hit.provenance.origin->depth << '\n';
        }
        out << key << ".extensions = " << join_words(hit.provenance.extensions) << '\n';
        out << key << ".cond_i = " << (hit.report.cond_i ? "true" : "false") << '\n';
        out << key << ".cond_ii = " << (hit.report.cond_ii ? "true" : "false") << '\n';
        out << key << ".cond_iii = " << (hit.report.cond_iii ? "true" : "false") << '\n';
        out << key << ".cond_iv = " << (hit.report.cond_iv ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace posttag
