#include "posttag/building_block.hpp"

#include "posttag/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace posttag {

namespace {

template <typename T>
void sort_unique(std::vector<T>& items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
}

void grow_initial(const unsigned depth, std::vector<BlockWord>& rows, const BlockWord& pending, unsigned level,
                  std::vector<BuildingBlock>& out) {
    const std::vector<BlockWord> members = converting_set(pending);
    if (level > depth) {
        for (const BlockWord& last : members) {
            rows.push_back(last);
            out.push_back(BuildingBlock{rows});
            rows.pop_back();
        }
        return;
    }
    for (const BlockWord& row : members) {
        if (literal_count(row) == 0) {
            continue;
        }
        rows.push_back(row);
        grow_initial(depth, rows, expand_literals(row), level + 1, out);
        rows.pop_back();
    }
}

void extend_from_row(BuildingBlock& block, std::size_t row, const BlockWord& pending, const BlockWord& suffix,
                     std::vector<Extension>& out) {
    const BlockWord original = block.rows[row];
    const BlockWord word = original + pending;
    const std::size_t base = original.size();
    std::vector<BlockSymbol> survivors;
    for (const BlockWord& replaced : converting_set(word)) {
        survivors.clear();
        for (std::size_t j = base; j < word.size(); ++j) {
            if (is_literal(word[j]) && replaced[j] == word[j]) {
                survivors.push_back(word[j]);
            }
        }
        block.rows[row] = replaced;
        if (survivors.empty() || row + 1 == block.rows.size()) {
            out.push_back(Extension{block, suffix});
        } else {
            extend_from_row(block, row + 1, expand_literals(survivors), suffix, out);
        }
    }
    block.rows[row] = original;
}

void collect_suffixes(const BlockWord& first_row, const detail::StateCounts& counts, BlockWord& suffix,
                      std::size_t base_literals, const ExtendOptions& options, std::vector<BlockWord>& out) {
    for (const BlockSymbol s : {BlockSymbol::Zero, BlockSymbol::One}) {
        const detail::StateCounts next = detail::feed(counts, s);
        if (detail::all_dead(next)) {
            continue;
        }
        suffix.push_back(s);
        if (detail::accepted(next) == 1) {
            const std::vector<BlockWord> members = converting_set(first_row + suffix);
            if (literal_count(members.front()) == base_literals + 1) {
                out.push_back(suffix);
            }
        }
        if (suffix.size() < options.max_suffix_length) {
            collect_suffixes(first_row, next, suffix, base_literals, options, out);
        }
        suffix.pop_back();
    }
}

} // namespace

std::string to_string(const BuildingBlock& block) {
    std::string out;
    for (const BlockWord& row : block.rows) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

bool is_initial_seed(const BlockWord& seed) noexcept {
    std::size_t i = 0;
    const std::size_t n = seed.size();
    std::size_t vs = 0;
    while (i < n && seed[i] == BlockSymbol::V && vs < 2) {
        ++i;
        ++vs;
    }
    if (i >= n || !is_literal(seed[i])) {
        return false;
    }
    ++i;
    std::size_t ws = 0;
    while (i < n && seed[i] == BlockSymbol::W && ws < 2) {
        ++i;
        ++ws;
    }
    return i == n;
}

std::vector<BlockWord> initial_seeds() {
    std::vector<BlockWord> seeds;
    for (const char* prefix : {"", "v", "vv"}) {
        for (const char* literal : {"0", "1"}) {
            for (const char* tail : {"", "w", "ww"}) {
                seeds.push_back(BlockWord::parse(std::string(prefix) + literal + tail));
            }
        }
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

std::vector<BuildingBlock> create_initial_blocks(const BlockWord& seed, unsigned depth) {
    if (!is_initial_seed(seed)) {
        throw InvalidSeed("'" + seed.to_string() + "' is not of the form {e,v,vv}{0,1}{e,w,ww}");
    }
    if (depth == 0) {
        throw std::invalid_argument("initial block depth must be positive");
    }
    std::vector<BuildingBlock> out;
    std::vector<BlockWord> rows;
    rows.reserve(depth + 1);
    grow_initial(depth, rows, seed, 1, out);
    sort_unique(out);
    return out;
}

std::vector<BlockWord> extension_suffixes(const BlockWord& first_row, const ExtendOptions& options) {
    std::vector<BlockWord> out;
    if (options.max_suffix_length == 0) {
        return out;
    }
    detail::StateCounts counts = detail::initial_counts();
    for (const BlockSymbol s : first_row.symbols()) {
        counts = detail::feed(counts, s);
    }
    if (detail::all_dead(counts)) {
        return out;
    }
    BlockWord suffix;
    collect_suffixes(first_row, counts, suffix, literal_count(first_row), options, out);
    return out;
}

std::vector<Extension> extend_right(const BuildingBlock& block, const ExtendOptions& options) {
    if (block.rows.empty()) {
        throw std::invalid_argument("building block has no rows");
    }
    const std::vector<BlockWord> suffixes = extension_suffixes(block.rows.front(), options);
    if (suffixes.empty()) {
        throw NoExtension("no suffix of length <= " + std::to_string(options.max_suffix_length) +
                          " extends first row '" + block.rows.front().to_string() + "'");
    }
    std::vector<Extension> out;
    BuildingBlock work = block;
    for (const BlockWord& suffix : suffixes) {
        extend_from_row(work, 0, suffix, suffix, out);
    }
    sort_unique(out);
    return out;
}

ConditionReport check_conditions(const BuildingBlock& block, const Provenance& provenance) {
    ConditionReport report;
    const auto& rows = block.rows;
    if (rows.empty()) {
        return report;
    }
    const std::size_t n = rows.size() - 1;
    report.cond_i = provenance.origin.has_value() && is_initial_seed(provenance.origin->seed) &&
                    provenance.origin->depth == n;
    report.cond_ii = rows.front() == rows.back();
    report.cond_iii = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (count(rows[i], BlockSymbol::W) + count(rows[i + 1], BlockSymbol::V) != 2) {
            report.cond_iii = false;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (count(rows[i], BlockSymbol::V) == 0) {
            report.cond_iv = true;
            break;
        }
    }
    return report;
}

} // namespace posttag
