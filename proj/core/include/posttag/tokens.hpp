#ifndef POSTTAG_TOKENS_HPP
#define POSTTAG_TOKENS_HPP

#include "posttag/binary_word.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace posttag {

/// Z stands for the segment 00, O for 1101.
enum class Token : std::uint8_t { Z, O };

/// Compact rendering of a word built from 00 / 1101 segments.
class TokenWord {
public:
    TokenWord() = default;
    explicit TokenWord(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    /// Parses a string over {Z,O}. Throws ParseError otherwise.
    static TokenWord parse(std::string_view text);

    [[nodiscard]] const std::vector<Token>& tokens() const noexcept { return tokens_; }
    [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TokenWord&, const TokenWord&) = default;

private:
    std::vector<Token> tokens_;
};

/// Greedy left-to-right split into 00 / 1101. Throws NotTokenizable.
[[nodiscard]] TokenWord encode_tokens(const BinaryWord& word);

[[nodiscard]] BinaryWord decode_tokens(const TokenWord& tokens);

} // namespace posttag

#endif // POSTTAG_TOKENS_HPP
