#include "rllsidc/bitseq.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "rllsidc/errors.hpp"

namespace rllsidc {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

BitSeq::BitSeq(std::size_t n, bool value) : words_(words_for(n), value ? ~0ull : 0ull), size_(n) {
    clear_tail();
}

BitSeq::BitSeq(std::initializer_list<int> symbols) {
    words_.reserve(words_for(symbols.size()));
    for (int v : symbols) {
        if (v != 0 && v != 1) throw DataError("symbol must be 0 or 1, got " + std::to_string(v));
        push_back(v == 1);
    }
}

BitSeq BitSeq::parse(std::string_view text) {
    BitSeq s;
    s.words_.reserve(words_for(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw DataError("invalid symbol at position " + std::to_string(i + 1) +
                            " (expected '0' or '1')");
        }
        s.push_back(c == '1');
    }
    return s;
}

BitSeq BitSeq::from_word(std::uint64_t word, std::size_t n) {
    if (n > 64) throw RangeError("from_word: length " + std::to_string(n) + " exceeds 64");
    BitSeq s;
    s.size_ = n;
    if (n > 0) s.words_.push_back(word);
    s.clear_tail();
    return s;
}

bool BitSeq::at(std::size_t i) const {
    if (i >= size_) {
        throw RangeError("position " + std::to_string(i + 1) + " outside sequence of length " +
                         std::to_string(size_));
    }
    return (*this)[i];
}

void BitSeq::set(std::size_t i, bool value) {
    if (i >= size_) {
        throw RangeError("position " + std::to_string(i + 1) + " outside sequence of length " +
                         std::to_string(size_));
    }
    const std::uint64_t bit = 1ull << (i & 63);
    if (value)
        words_[i >> 6] |= bit;
    else
        words_[i >> 6] &= ~bit;
}

void BitSeq::push_back(bool value) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (value) words_[size_ >> 6] |= 1ull << (size_ & 63);
    ++size_;
}

void BitSeq::append(const BitSeq& tail) {
    // copy first so self-append works
    const BitSeq copy = tail;
    words_.reserve(words_for(size_ + copy.size_));
    for (std::size_t i = 0; i < copy.size_; ++i) push_back(copy[i]);
}

void BitSeq::append_run(bool value, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) push_back(value);
}

BitSeq BitSeq::slice(std::size_t first, std::size_t count) const {
    if (first > size_ || count > size_ - first) {
        throw RangeError("slice [" + std::to_string(first + 1) + ", " +
                         std::to_string(first + count) + "] outside sequence of length " +
                         std::to_string(size_));
    }
    BitSeq out;
    out.words_.reserve(words_for(count));
    for (std::size_t i = 0; i < count; ++i) out.push_back((*this)[first + i]);
    return out;
}

void BitSeq::erase(std::size_t first, std::size_t count) {
    if (first > size_ || count > size_ - first) {
        throw RangeError("erase [" + std::to_string(first + 1) + ", " +
                         std::to_string(first + count) + "] outside sequence of length " +
                         std::to_string(size_));
    }
    if (count == 0) return;
    for (std::size_t i = first; i + count < size_; ++i) set(i, (*this)[i + count]);
    size_ -= count;
    words_.resize(words_for(size_));
    clear_tail();
}

void BitSeq::insert(std::size_t index, bool value) {
    if (index > size_) {
        throw RangeError("insert position " + std::to_string(index + 1) +
                         " outside [1, " + std::to_string(size_ + 1) + "]");
    }
    push_back(false);
    for (std::size_t i = size_ - 1; i > index; --i) set(i, (*this)[i - 1]);
    set(index, value);
}

void BitSeq::insert(std::size_t index, const BitSeq& block) {
    if (index > size_) {
        throw RangeError("insert position " + std::to_string(index + 1) +
                         " outside [1, " + std::to_string(size_ + 1) + "]");
    }
    BitSeq out = slice(0, index);
    out.append(block);
    out.append(slice(index, size_ - index));
    *this = std::move(out);
}

std::size_t BitSeq::count_ones() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::uint64_t BitSeq::to_word() const {
    if (size_ > 64) throw RangeError("to_word: length " + std::to_string(size_) + " exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

std::string BitSeq::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) out[i] = '1';
    return out;
}

std::strong_ordering operator<=>(const BitSeq& a, const BitSeq& b) noexcept {
    const std::size_t common = std::min(a.size_, b.size_);
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.size_ <=> b.size_;
}

std::size_t BitSeq::hash() const noexcept {
    // FNV-1a over the packed words and the length
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(size_);
    for (auto w : words_) mix(w);
    return static_cast<std::size_t>(h);
}

void BitSeq::clear_tail() noexcept {
    const std::size_t used = size_ & 63;
    if (used != 0 && !words_.empty()) words_.back() &= (1ull << used) - 1;
}

BitSeq operator+(BitSeq head, const BitSeq& tail) {
    head.append(tail);
    return head;
}

std::ostream& operator<<(std::ostream& os, const BitSeq& s) { return os << s.to_string(); }

BitSeq run_of(bool value, std::size_t count) { return BitSeq(count, value); }

std::size_t max_run_length(const BitSeq& s) noexcept {
    std::size_t best = 0;
    std::size_t current = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        current = (i > 0 && s[i] == s[i - 1]) ? current + 1 : 1;
        best = std::max(best, current);
    }
    return best;
}

std::size_t max_zero_run(const BitSeq& s) noexcept {
    std::size_t best = 0;
    std::size_t current = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        current = s[i] ? 0 : current + 1;
        best = std::max(best, current);
    }
    return best;
}

bool is_rll(const BitSeq& s, std::size_t r) {
    if (r < 1) throw RangeError("is_rll: r must be >= 1");
    return max_run_length(s) <= r;
}

bool is_zero_constrained(const BitSeq& s, std::size_t r) {
    if (r < 2) throw RangeError("is_zero_constrained: r must be >= 2, got " + std::to_string(r));
    return max_zero_run(s) <= r - 1;
}

BitSeq le_encode(std::uint64_t x, std::size_t k) {
    if (k < 1 || k > 64) {
        throw RangeError("le_encode: width k=" + std::to_string(k) + " outside [1, 64]");
    }
    if (k < 64 && (x >> k) != 0) {
        throw RangeError("le_encode: x=" + std::to_string(x) + " does not fit in k=" +
                         std::to_string(k) + " symbols");
    }
    return BitSeq::from_word(x, k);
}

std::uint64_t le_decode(const BitSeq& s) {
    if (s.empty()) throw DataError("le_decode: empty sequence");
    if (s.size() > 64) throw DataError("le_decode: length " + std::to_string(s.size()) + " exceeds 64");
    return s.to_word();
}

}  // namespace rllsidc
