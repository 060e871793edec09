#include "posttag/binary_word.hpp"

#include "posttag/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace posttag {

namespace {

constexpr std::size_t kBlockBits = 64;
// Front deletions leave a dead prefix; compaction starts once it is at least
// this many bits and larger than the live part.
constexpr std::size_t kCompactThreshold = 1024;

constexpr std::uint64_t low_mask(unsigned count) noexcept {
    return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

} // namespace

// Storage invariant: every bit at a position >= end_ is zero, so append_bits
// can OR new symbols in place.

BinaryWord BinaryWord::parse(std::string_view text) {
    BinaryWord word;
    word.reserve_bits(text.size());
    std::uint64_t pending = 0;
    unsigned filled = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw ParseError("binary word: unexpected character '" + std::string(1, ch) +
                             "' at position " + std::to_string(i));
        }
        pending |= static_cast<std::uint64_t>(ch - '0') << filled;
        if (++filled == kBlockBits) {
            word.append_bits(pending, filled);
            pending = 0;
            filled = 0;
        }
    }
    if (filled != 0) {
        word.append_bits(pending, filled);
    }
    return word;
}

BinaryWord BinaryWord::filled(std::size_t count, unsigned symbol) {
    BinaryWord word;
    word.reserve_bits(count);
    const std::uint64_t pattern = symbol ? ~std::uint64_t{0} : 0;
    while (count > 0) {
        const auto n = static_cast<unsigned>(std::min<std::size_t>(count, kBlockBits));
        word.append_bits(pattern, n);
        count -= n;
    }
    return word;
}

unsigned BinaryWord::at(std::size_t i) const {
    if (i >= size()) {
        throw std::out_of_range("BinaryWord::at: index " + std::to_string(i) +
                                " out of range for length " + std::to_string(size()));
    }
    return (*this)[i];
}

void BinaryWord::reserve_bits(std::size_t total_bits) {
    const std::size_t needed = (total_bits + kBlockBits - 1) / kBlockBits;
    if (blocks_.size() < needed) {
        blocks_.resize(std::max(needed, blocks_.size() * 2), 0);
    }
}

void BinaryWord::push_back(unsigned symbol) {
    append_bits(symbol & 1U, 1);
}

void BinaryWord::append_bits(std::uint64_t bits, unsigned count) {
    if (count == 0) {
        return;
    }
    bits &= low_mask(count);
    reserve_bits(end_ + count);
    const std::size_t index = end_ >> 6;
    const unsigned offset = static_cast<unsigned>(end_ & 63);
    blocks_[index] |= bits << offset;
    if (offset + count > kBlockBits) {
        blocks_[index + 1] |= bits >> (kBlockBits - offset);
    }
    end_ += count;
}

void BinaryWord::append(const BinaryWord& other) {
    const std::size_t n = other.size();
    reserve_bits(end_ + n);
    for (std::size_t pos = 0; pos < n; pos += kBlockBits) {
        const auto count = static_cast<unsigned>(std::min(kBlockBits, n - pos));
        append_bits(other.chunk(pos), count);
    }
}

std::uint64_t BinaryWord::chunk(std::size_t pos) const noexcept {
    const std::size_t live = size();
    if (pos >= live) {
        return 0;
    }
    const std::size_t p = begin_ + pos;
    const std::size_t index = p >> 6;
    const unsigned offset = static_cast<unsigned>(p & 63);
    std::uint64_t bits = blocks_[index] >> offset;
    if (offset != 0 && index + 1 < blocks_.size()) {
        bits |= blocks_[index + 1] << (kBlockBits - offset);
    }
    const std::size_t remaining = live - pos;
    if (remaining < kBlockBits) {
        bits &= low_mask(static_cast<unsigned>(remaining));
    }
    return bits;
}

void BinaryWord::drop_front(std::size_t n) {
    if (n > size()) {
        throw WordTooShort("cannot remove " + std::to_string(n) + " symbols from a word of length " +
                           std::to_string(size()));
    }
    begin_ += n;
    if (begin_ == end_) {
        std::fill(blocks_.begin(), blocks_.end(), 0);
        begin_ = end_ = 0;
    } else if (begin_ >= kCompactThreshold && begin_ > size()) {
        compact();
    }
}

void BinaryWord::compact() {
    const std::size_t live = size();
    const std::size_t used = (live + kBlockBits - 1) / kBlockBits;
    // Reads run ahead of writes (source block index >= destination index),
    // so the shift can be done in place.
    for (std::size_t i = 0; i < used; ++i) {
        blocks_[i] = chunk(i * kBlockBits);
    }
    std::fill(blocks_.begin() + static_cast<std::ptrdiff_t>(used), blocks_.end(), 0);
    begin_ = 0;
    end_ = live;
}

BinaryWord BinaryWord::suffix(std::size_t n) const {
    if (n > size()) {
        throw WordTooShort("cannot cut " + std::to_string(n) + " symbols from a word of length " +
                           std::to_string(size()));
    }
    BinaryWord out;
    const std::size_t len = size() - n;
    out.reserve_bits(len);
    for (std::size_t pos = 0; pos < len; pos += kBlockBits) {
        out.append_bits(chunk(n + pos), static_cast<unsigned>(std::min(kBlockBits, len - pos)));
    }
    return out;
}

std::size_t BinaryWord::count_ones() const noexcept {
    std::size_t total = 0;
    for (std::size_t pos = 0; pos < size(); pos += kBlockBits) {
        total += static_cast<std::size_t>(std::popcount(chunk(pos)));
    }
    return total;
}

std::string BinaryWord::to_string() const {
    std::string out(size(), '0');
    for (std::size_t i = 0; i < out.size(); ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

bool operator==(const BinaryWord& lhs, const BinaryWord& rhs) noexcept {
    const std::size_t n = lhs.size();
    if (n != rhs.size()) {
        return false;
    }
    for (std::size_t pos = 0; pos < n; pos += kBlockBits) {
        if (lhs.chunk(pos) != rhs.chunk(pos)) {
            return false;
        }
    }
    return true;
}

BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) {
    lhs.append(rhs);
    return lhs;
}

BinaryWord repeat(const BinaryWord& word, std::size_t times) {
    BinaryWord out;
    for (std::size_t i = 0; i < times; ++i) {
        out.append(word);
    }
    return out;
}

} // namespace posttag
