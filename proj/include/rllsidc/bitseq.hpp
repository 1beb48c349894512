#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rllsidc {

// Finite binary sequence, packed 64 symbols per word.
//
// Indexing through operator[]/at/set/insert/erase/slice is 0-based like any
// standard container. Everything exposed to users as a *position* (error
// messages, channel events, WI pointers) is 1-based.
//
// Text form is the symbols as '0'/'1' characters with no separators; the
// empty string is the empty sequence.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::size_t n, bool value = false);
    BitSeq(std::initializer_list<int> symbols);

    // Throws DataError on any character other than '0' or '1'.
    static BitSeq parse(std::string_view text);
    // Symbol i (0-based) is bit i of `word`. n <= 64.
    static BitSeq from_word(std::uint64_t word, std::size_t n);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    bool at(std::size_t i) const;
    void set(std::size_t i, bool value);

    void push_back(bool value);
    void append(const BitSeq& tail);
    void append_run(bool value, std::size_t count);

    BitSeq slice(std::size_t first, std::size_t count) const;
    void erase(std::size_t first, std::size_t count = 1);
    void insert(std::size_t index, bool value);
    void insert(std::size_t index, const BitSeq& block);

    std::size_t count_ones() const noexcept;
    // Inverse of from_word; requires size() <= 64.
    std::uint64_t to_word() const;
    std::string to_string() const;

    friend bool operator==(const BitSeq& a, const BitSeq& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    // Lexicographic on symbols, shorter prefix first.
    friend std::strong_ordering operator<=>(const BitSeq& a, const BitSeq& b) noexcept;

    std::size_t hash() const noexcept;

private:
    void clear_tail() noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

BitSeq operator+(BitSeq head, const BitSeq& tail);
std::ostream& operator<<(std::ostream& os, const BitSeq& s);

// All `count` symbols equal to `value`.
BitSeq run_of(bool value, std::size_t count);

std::size_t max_run_length(const BitSeq& s) noexcept;
std::size_t max_zero_run(const BitSeq& s) noexcept;
// s is in S_{|s|,r}; r >= 1.
bool is_rll(const BitSeq& s, std::size_t r);
// No run of r or more zeros; r >= 2.
bool is_zero_constrained(const BitSeq& s, std::size_t r);

// k-symbol little-endian representation: x = sum g_i 2^i, g_0 first.
BitSeq le_encode(std::uint64_t x, std::size_t k);
std::uint64_t le_decode(const BitSeq& s);

}  // namespace rllsidc

template <>
struct std::hash<rllsidc::BitSeq> {
    std::size_t operator()(const rllsidc::BitSeq& s) const noexcept { return s.hash(); }
};
