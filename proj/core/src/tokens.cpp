#include "posttag/tokens.hpp"

#include "posttag/errors.hpp"

namespace posttag {

TokenWord TokenWord::parse(std::string_view text) {
    std::vector<Token> tokens;
    tokens.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'Z':
            tokens.push_back(Token::Z);
            break;
        case 'O':
            tokens.push_back(Token::O);
            break;
        default:
            throw ParseError("token word: unexpected character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i));
        }
    }
    return TokenWord(std::move(tokens));
}

std::string TokenWord::to_string() const {
    std::string out;
    out.reserve(tokens_.size());
    for (const Token t : tokens_) {
        out.push_back(t == Token::Z ? 'Z' : 'O');
    }
    return out;
}

TokenWord encode_tokens(const BinaryWord& word) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    const std::size_t n = word.size();
    while (pos < n) {
        // 00 and 1101 differ in the first symbol, so greedy parsing is unambiguous.
        if (word[pos] == 0) {
            if (pos + 1 < n && word[pos + 1] == 0) {
                tokens.push_back(Token::Z);
                pos += 2;
                continue;
            }
        } else if (pos + 3 < n && word[pos + 1] == 1 && word[pos + 2] == 0 && word[pos + 3] == 1) {
            tokens.push_back(Token::O);
            pos += 4;
            continue;
        }
        throw NotTokenizable("no 00 or 1101 segment at position " + std::to_string(pos));
    }
    return TokenWord(std::move(tokens));
}

BinaryWord decode_tokens(const TokenWord& tokens) {
    BinaryWord word;
    for (const Token t : tokens.tokens()) {
        if (t == Token::Z) {
            word.append_bits(0b00, 2);
        } else {
            word.append_bits(0b1011, 4); // 1101, first symbol in the low bit
        }
    }
    return word;
}

} // namespace posttag
