#include "posttag/mod3.hpp"

#include "posttag/errors.hpp"
#include "posttag/tag_system.hpp"

#include <string>

namespace posttag {

namespace {

constexpr std::size_t kMinPassLength = 4;

void require_pass_length(const BinaryWord& word) {
    if (word.size() < kMinPassLength) {
        throw WordTooShort("full pass needs at least 4 symbols, word has " + std::to_string(word.size()));
    }
}

} // namespace

Mod3Residue length_residue(const BinaryWord& word) noexcept {
    return Mod3Residue(static_cast<std::int64_t>(word.size() % 3));
}

BinaryWord cut(const BinaryWord& word, Mod3Residue x) {
    return word.suffix(x.value());
}

BinaryWord sample_expand(const BinaryWord& word) {
    BinaryWord out;
    for (std::size_t i = 0; i < word.size(); i += 3) {
        if (word[i]) {
            out.append_bits(0b1011, 4);
        } else {
            out.append_bits(0b00, 2);
        }
    }
    return out;
}

BinaryWord full_pass_simulated(const BinaryWord& word) {
    require_pass_length(word);
    BinaryWord current = word;
    const std::uint64_t steps = full_pass_steps(word.size());
    for (std::uint64_t i = 0; i < steps; ++i) {
        advance(current);
    }
    return current;
}

BinaryWord full_pass_algebraic(const BinaryWord& word) {
    require_pass_length(word);
    return cut(sample_expand(word), -length_residue(word));
}

} // namespace posttag
