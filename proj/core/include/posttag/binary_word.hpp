#ifndef POSTTAG_BINARY_WORD_HPP
#define POSTTAG_BINARY_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace posttag {

/**
 * A finite word over {0,1}, stored bit-packed.
 *
 * Symbols live in 64-bit blocks, least significant bit first. The live
 * range is [begin_, end_) in bit positions; removing symbols from the front
 * only advances begin_, and the storage is compacted once the dead prefix
 * outgrows the live part. Appends and front deletions are therefore
 * amortized O(1) per symbol, which is what a tag-system step needs.
 *
 * Bits outside the live range are unspecified; nothing in the interface
 * exposes them.
 */
class BinaryWord {
public:
    BinaryWord() = default;

    /// Parses a string over {0,1}. Throws ParseError on any other character.
    static BinaryWord parse(std::string_view text);

    /// `count` copies of `symbol` (0 or 1).
    static BinaryWord filled(std::size_t count, unsigned symbol);

    [[nodiscard]] std::size_t size() const noexcept { return end_ - begin_; }
    [[nodiscard]] bool empty() const noexcept { return end_ == begin_; }

    /// Symbol at position `i` (0 or 1). No bounds check.
    [[nodiscard]] unsigned operator[](std::size_t i) const noexcept {
        const std::size_t p = begin_ + i;
        return static_cast<unsigned>((blocks_[p >> 6] >> (p & 63)) & 1U);
    }

    /// Bounds-checked symbol access; throws std::out_of_range.
    [[nodiscard]] unsigned at(std::size_t i) const;

    void push_back(unsigned symbol);
    void append(const BinaryWord& other);

    /// Appends the low `count` bits of `bits` (position 0 first), count <= 64.
    void append_bits(std::uint64_t bits, unsigned count);

    /// Removes the first `n` symbols. Throws WordTooShort if n > size().
    void drop_front(std::size_t n);

    /// Copy without the first `n` symbols. Throws WordTooShort if n > size().
    [[nodiscard]] BinaryWord suffix(std::size_t n) const;

    /// Up to 64 symbols starting at `pos`, packed LSB-first. Positions at or
    /// past size() read as 0.
    [[nodiscard]] std::uint64_t chunk(std::size_t pos) const noexcept;

    /// Number of 1 symbols.
    [[nodiscard]] std::size_t count_ones() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BinaryWord& lhs, const BinaryWord& rhs) noexcept;

private:
    void reserve_bits(std::size_t total_bits);
    void compact();

    std::vector<std::uint64_t> blocks_;
    std::size_t begin_ = 0;
    std::size_t end_ = 0;
};

[[nodiscard]] BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs);

/// `word` concatenated `times` times.
[[nodiscard]] BinaryWord repeat(const BinaryWord& word, std::size_t times);

} // namespace posttag

#endif // POSTTAG_BINARY_WORD_HPP
