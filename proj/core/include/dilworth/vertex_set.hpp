#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dilworth {

/// Fixed-universe bitset over vertices 0..size-1, stored as 64-bit blocks.
/// Bits at positions >= size are always zero.
class VertexSet {
public:
    using word = std::uint64_t;
    static constexpr int kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(int size) : size_(size), words_(word_count(size), 0) {}
    VertexSet(int size, std::initializer_list<int> members) : VertexSet(size) {
        for (int v : members) {
            set(v);
        }
    }

    static VertexSet full(int size) {
        VertexSet s(size);
        for (auto& w : s.words_) {
            w = ~word{0};
        }
        s.trim();
        return s;
    }

    static VertexSet of(int size, const std::vector<int>& members) {
        VertexSet s(size);
        for (int v : members) {
            s.set(v);
        }
        return s;
    }

    static std::size_t word_count(int size) {
        return static_cast<std::size_t>((size + kWordBits - 1) / kWordBits);
    }

    int size() const noexcept { return size_; }

    bool test(int v) const noexcept {
        return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void set(int v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] |= word{1} << (v % kWordBits); }
    void reset(int v) noexcept {
        words_[static_cast<std::size_t>(v) / kWordBits] &= ~(word{1} << (v % kWordBits));
    }
    void clear() noexcept {
        for (auto& w : words_) {
            w = 0;
        }
    }

    int count() const noexcept {
        int c = 0;
        for (word w : words_) {
            c += std::popcount(w);
        }
        return c;
    }

    bool empty() const noexcept {
        for (word w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    bool any() const noexcept { return !empty(); }

    /// Lowest member, or -1.
    int first() const noexcept { return next(0); }

    /// Lowest member >= from, or -1.
    int next(int from) const noexcept {
        if (from >= size_) {
            return -1;
        }
        std::size_t wi = static_cast<std::size_t>(from) / kWordBits;
        word w = words_[wi] & (~word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) {
                return static_cast<int>(wi * kWordBits) + std::countr_zero(w);
            }
            if (++wi >= words_.size()) {
                return -1;
            }
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word w = words_[wi];
            while (w != 0) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * kWordBits) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & o.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~o.words_[i]) != 0) {
                return false;
            }
        }
        return true;
    }

    int intersection_count(const VertexSet& o) const noexcept {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            c += std::popcount(words_[i] & o.words_[i]);
        }
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= o.words_[i];
        }
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= o.words_[i];
        }
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~o.words_[i];
        }
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            s.words_[i] = ~words_[i];
        }
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Lexicographic order on the ascending member lists.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        int x = a.first();
        int y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) {
                return x < y;
            }
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        return x < 0 && y >= 0;
    }

    const std::vector<word>& words() const noexcept { return words_; }

private:
    void trim() noexcept {
        if (size_ % kWordBits != 0 && !words_.empty()) {
            words_.back() &= (word{1} << (size_ % kWordBits)) - 1;
        }
    }

    int size_ = 0;
    std::vector<word> words_;
};

}  // namespace dilworth
