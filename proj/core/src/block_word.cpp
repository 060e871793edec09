#include "posttag/block_word.hpp"

#include "posttag/errors.hpp"

#include <algorithm>
#include <limits>

namespace posttag {

namespace {

using detail::BState;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
    return a > kSaturated - b ? kSaturated : a + b;
}

constexpr BlockSymbol kFromZero[] = {BlockSymbol::Zero, BlockSymbol::U, BlockSymbol::V, BlockSymbol::W};
constexpr BlockSymbol kFromOne[] = {BlockSymbol::One, BlockSymbol::U, BlockSymbol::V, BlockSymbol::W};
constexpr BlockSymbol kFromW[] = {BlockSymbol::U, BlockSymbol::W};
constexpr BlockSymbol kFromV[] = {BlockSymbol::V};
constexpr BlockSymbol kFromU[] = {BlockSymbol::U};

constexpr std::size_t index_of(BState s) noexcept { return static_cast<std::size_t>(s); }

} // namespace

char to_char(BlockSymbol s) noexcept {
    switch (s) {
    case BlockSymbol::Zero:
        return '0';
    case BlockSymbol::One:
        return '1';
    case BlockSymbol::U:
        return 'u';
    case BlockSymbol::V:
        return 'v';
    case BlockSymbol::W:
        return 'w';
    }
    return '?';
}

BlockSymbol block_symbol_from_char(char ch) {
    switch (ch) {
    case '0':
        return BlockSymbol::Zero;
    case '1':
        return BlockSymbol::One;
    case 'u':
        return BlockSymbol::U;
    case 'v':
        return BlockSymbol::V;
    case 'w':
        return BlockSymbol::W;
    default:
        throw ParseError("block word: unexpected character '" + std::string(1, ch) + "'");
    }
}

BlockWord BlockWord::parse(std::string_view text) {
    std::vector<BlockSymbol> symbols;
    symbols.reserve(text.size());
    for (const char ch : text) {
        symbols.push_back(block_symbol_from_char(ch));
    }
    return BlockWord(std::move(symbols));
}

std::string BlockWord::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (const BlockSymbol s : symbols_) {
        out.push_back(to_char(s));
    }
    return out;
}

BlockWord operator+(BlockWord lhs, const BlockWord& rhs) {
    lhs.append(rhs);
    return lhs;
}

std::size_t count(const BlockWord& word, BlockSymbol symbol) noexcept {
    const auto symbols = word.symbols();
    return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), symbol));
}

std::size_t literal_count(const BlockWord& word) noexcept {
    return count(word, BlockSymbol::Zero) + count(word, BlockSymbol::One);
}

std::span<const BlockSymbol> replacement_choices(BlockSymbol source) noexcept {
    switch (source) {
    case BlockSymbol::Zero:
        return kFromZero;
    case BlockSymbol::One:
        return kFromOne;
    case BlockSymbol::W:
        return kFromW;
    case BlockSymbol::V:
        return kFromV;
    case BlockSymbol::U:
        return kFromU;
    }
    return {};
}

namespace detail {

BState transition(BState state, BlockSymbol symbol) noexcept {
    const bool literal = is_literal(symbol);
    switch (state) {
    case BState::Start:
        if (symbol == BlockSymbol::V) {
            return BState::OneV;
        }
        return literal ? BState::Literal : BState::Dead;
    case BState::OneV:
        if (symbol == BlockSymbol::V) {
            return BState::TwoV;
        }
        return literal ? BState::Literal : BState::Dead;
    case BState::TwoV:
    case BState::TwoU:
        return literal ? BState::Literal : BState::Dead;
    case BState::Literal:
        if (symbol == BlockSymbol::U) {
            return BState::OneU;
        }
        return symbol == BlockSymbol::W ? BState::OneW : BState::Dead;
    case BState::OneU:
        return symbol == BlockSymbol::U ? BState::TwoU : BState::Dead;
    case BState::OneW:
        return symbol == BlockSymbol::W ? BState::TwoW : BState::Dead;
    case BState::TwoW:
    case BState::Dead:
        return BState::Dead;
    }
    return BState::Dead;
}

bool accepting(BState state) noexcept {
    return state == BState::Literal || state == BState::OneW || state == BState::TwoW;
}

StateCounts initial_counts() noexcept {
    StateCounts counts{};
    counts[index_of(BState::Start)] = 1;
    return counts;
}

StateCounts feed(const StateCounts& counts, BlockSymbol source) noexcept {
    StateCounts next{};
    for (std::size_t s = 0; s < kBStateCount; ++s) {
        if (counts[s] == 0) {
            continue;
        }
        for (const BlockSymbol choice : replacement_choices(source)) {
            const BState to = transition(static_cast<BState>(s), choice);
            if (to != BState::Dead) {
                next[index_of(to)] = saturating_add(next[index_of(to)], counts[s]);
            }
        }
    }
    return next;
}

std::uint64_t accepted(const StateCounts& counts) noexcept {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < kBStateCount; ++s) {
        if (accepting(static_cast<BState>(s))) {
            total = saturating_add(total, counts[s]);
        }
    }
    return total;
}

bool all_dead(const StateCounts& counts) noexcept {
    return std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 0; });
}

} // namespace detail

bool in_language(const BlockWord& word) noexcept {
    BState state = BState::Start;
    for (const BlockSymbol s : word.symbols()) {
        state = detail::transition(state, s);
        if (state == BState::Dead) {
            return false;
        }
    }
    return detail::accepting(state);
}

std::vector<BlockWord> converting_set(const BlockWord& word) {
    const std::size_t n = word.size();
    // alive[i * kBStateCount + s]: an accepting run exists from state s over
    // the choices of positions i..n-1.
    std::vector<char> alive((n + 1) * detail::kBStateCount, 0);
    for (std::size_t s = 0; s < detail::kBStateCount; ++s) {
        alive[n * detail::kBStateCount + s] = detail::accepting(static_cast<BState>(s)) ? 1 : 0;
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t s = 0; s < detail::kBStateCount; ++s) {
            char ok = 0;
            for (const BlockSymbol choice : replacement_choices(word[i])) {
                const BState to = detail::transition(static_cast<BState>(s), choice);
                if (to != BState::Dead && alive[(i + 1) * detail::kBStateCount + index_of(to)]) {
                    ok = 1;
                    break;
                }
            }
            alive[i * detail::kBStateCount + s] = ok;
        }
    }

    std::vector<BlockWord> out;
    if (!alive[index_of(BState::Start)]) {
        return out;
    }

    // Depth-first walk over live states; choices are tried in canonical
    // order, so members come out sorted.
    struct Frame {
        BState state;
        std::size_t next_choice;
    };
    std::vector<Frame> stack;
    std::vector<BlockSymbol> current;
    stack.reserve(n + 1);
    current.reserve(n);
    stack.push_back({BState::Start, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        const std::size_t depth = stack.size() - 1;
        if (depth == n) {
            out.emplace_back(current);
            stack.pop_back();
            if (!current.empty()) {
                current.pop_back();
            }
            continue;
        }
        const auto choices = replacement_choices(word[depth]);
        bool descended = false;
        while (top.next_choice < choices.size()) {
            const BlockSymbol choice = choices[top.next_choice++];
            const BState to = detail::transition(top.state, choice);
            if (to != BState::Dead && alive[(depth + 1) * detail::kBStateCount + index_of(to)]) {
                current.push_back(choice);
                stack.push_back({to, 0});
                descended = true;
                break;
            }
        }
        if (!descended) {
            stack.pop_back();
            if (!current.empty()) {
                current.pop_back();
            }
        }
    }
    return out;
}

std::uint64_t converting_set_size(const BlockWord& word) noexcept {
    detail::StateCounts counts = detail::initial_counts();
    for (const BlockSymbol s : word.symbols()) {
        counts = detail::feed(counts, s);
    }
    return detail::accepted(counts);
}

BlockWord expand_literals(std::span<const BlockSymbol> literals) {
    std::vector<BlockSymbol> out;
    out.reserve(literals.size() * 4);
    for (const BlockSymbol s : literals) {
        if (s == BlockSymbol::Zero) {
            out.insert(out.end(), {BlockSymbol::Zero, BlockSymbol::Zero});
        } else if (s == BlockSymbol::One) {
            out.insert(out.end(), {BlockSymbol::One, BlockSymbol::One, BlockSymbol::Zero, BlockSymbol::One});
        }
    }
    return BlockWord(std::move(out));
}

BlockWord expand_literals(const BlockWord& word) {
    return expand_literals(word.symbols());
}

} // namespace posttag
