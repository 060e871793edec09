#include "posttag/constants.hpp"

#include <string>

namespace posttag {

namespace {

constexpr std::string_view kPrefixText = "000011011101110100";

// 2402 symbols, 74 per line.
constexpr std::string_view kCoreText =
    "00000011011101000000110100110100001101110111011101110111010000001101110111"
    "01000000110111011101000000110111011101000000110111011101001101110111011101"
    "11010011011101110111011101000000000011011101110100001101110100000011011101"
    "11010000001101110111010000001101110111010000000011011101110111010011011101"
    "11010000110111010011011101110111011101001101001101110111010000001101110111"
    "01000000110111011101000000110111011101110111010011010000110111010011010000"
    "11011101001101000011011101001101000011011101001101000000000011010011010000"
    "00110111011101000000000000001101000000000000001101110111010000001101110111"
    "01000000110111011101110111010011010011010011010011011101110100000011011101"
    "11010011011101110111011101001101110111011101110100110111011101110111010011"
    "01110111011101110100000000000000110111011101000000110111011101001101001101"
    "00000011011101110100000000110111010000000011011101000000001101110100000000"
    "00000000000000001101110100110100001101110100110100110111011101001101110111"
    "01110111010011010000110111010011010011010011011101110100000011011101110100"
    "00000011011101001101000011011101001101001101110111010011011101110111011101"
    "00110100001101110100110100001101110100110100001101110100110100001101110100"
    "11011101110100000000001101110111010000001101110111010000001101110111010011"
    "01110111010000110111010000000011011101001101110111010000001101110111011101"
    "11010011011101110100110111011101110111010000001101110111010000001101110111"
    "01000000110111011101110111011101110111011101001101000011011101001101000000"
    "11010000000000110111011101000000110111011101000000110111011101001101110111"
    "01001101001101000000000011011101110111011101110111010011010011011101110100"
    "00001101110111010011011101110100110100110100110111011101000000110111011101"
    "00110100110100000011010011010011010011010000001101110111011101110100110111"
    "01110100000011011101110100110100001101110100110100000011011101110111011101"
    "00110111011101110111010011010000110111010011010000001101000000110111011101"
    "11011101000000110111011101000000110111011101000000000011011101110100000011"
    "01110111011101110100110111011101001101110111010011010000110111010011010000"
    "11011101001101001101110111010000000000110111011101000000110111011101000000"
    "11011101110100000011011101110100000000001101000000000000000000000011011101"
    "11011101110100110100110100110100001101110111011101000000000000001101001101"
    "00001101110111011101000000001101110111011101001101000011011101001101000011"
    "0111010011010000000000110111011101";

constexpr std::string_view kSuffixText = "000000110111011101000000110111011101000000110111011101";

constexpr std::uint64_t kPrefixHash = 0x935bb6d609ac891cULL;
constexpr std::uint64_t kCoreHash = 0x7b918aec297ec375ULL;
constexpr std::uint64_t kSuffixHash = 0x0261fbc2afe5c00cULL;

struct AppendixRow {
    std::string_view prefix_tokens;
    std::string_view suffix_tokens;
    int offset;
};

// Prefix word, suffix word and cut index of each of the 14 chain
// quadruplets, in Z/O token form.
constexpr AppendixRow kAppendix[] = {
    {"ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0},
    {"ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1},
    {"ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0},
    {"ZZZOOO", "ZZZOOOZZZOOOZZZOOO", 2},
    {"ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1},
    {"ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0},
    {"ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1},
    {"ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0},
    {"ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1},
    {"ZZOOOZ", "ZOOOZZZOOOZZZOOOZZ", 2},
    {"ZOOOZZ", "ZOOOZZZOOOZZZOOOZZ", 0},
    {"ZOOOZZ", "ZOOOZZZOOOZZZOOOZZ", 0},
    {"ZOOOZZ", "ZZOOOZZZOOOZZZOOOZ", 1},
    {"ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0},
};

void check_constant(std::string_view name, std::string_view text, std::size_t length, std::uint64_t hash) {
    if (text.size() != length || fnv1a(text) != hash) {
        throw Error("embedded constant " + std::string(name) + " failed its checksum (length " +
                    std::to_string(text.size()) + ")");
    }
}

} // namespace

std::uint64_t fnv1a(std::string_view text) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char ch : text) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

void verify_embedded_constants() {
    check_constant("prefix", kPrefixText, kPrefixLength, kPrefixHash);
    check_constant("core", kCoreText, kCoreLength, kCoreHash);
    check_constant("suffix", kSuffixText, kSuffixLength, kSuffixHash);
}

const BinaryWord& growth_prefix() {
    static const BinaryWord word = BinaryWord::parse(kPrefixText);
    return word;
}

const BinaryWord& growth_core() {
    static const BinaryWord word = BinaryWord::parse(kCoreText);
    return word;
}

const BinaryWord& growth_suffix() {
    static const BinaryWord word = BinaryWord::parse(kSuffixText);
    return word;
}

std::vector<AppendixEntry> appendix_vectors() {
    std::vector<AppendixEntry> out;
    out.reserve(std::size(kAppendix));
    for (const AppendixRow& row : kAppendix) {
        out.push_back(AppendixEntry{decode_tokens(TokenWord::parse(row.prefix_tokens)),
                                    decode_tokens(TokenWord::parse(row.suffix_tokens)),
                                    Mod3Residue(row.offset)});
    }
    return out;
}

} // namespace posttag
