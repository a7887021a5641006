#ifndef W4_BITSET_HPP
#define W4_BITSET_HPP

#include <cstdint>
#include <vector>
#include <cassert>
#include <bit>

namespace w4 {

// Fixed-size bitset sized at runtime. Used for vertex sets (keyed by
// vertex id) and edge sets (keyed by edge index).
class Bitset {
public:
    Bitset() : size_(0) {}
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const {
        assert(i >= 0 && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < size_);
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset operator~() const {
        Bitset r(*this);
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(size_ == o.size_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(size_ == o.size_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    // a \ b
    Bitset minus(const Bitset& o) const {
        assert(size_ == o.size_);
        Bitset r(*this);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(size_ == o.size_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    // this ⊆ o
    bool subset_of(const Bitset& o) const {
        assert(size_ == o.size_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;
    // lexicographic on the sorted member list
    bool operator<(const Bitset& o) const { return to_list() < o.to_list(); }

    std::vector<int> to_list() const {
        std::vector<int> v;
        for (int i = 0; i < size_; ++i) if (test(i)) v.push_back(i);
        return v;
    }

    static Bitset of(int size, const std::vector<int>& members) {
        Bitset b(size);
        for (int i : members) b.set(i);
        return b;
    }

private:
    void trim() {
        if (size_ & 63) {
            uint64_t mask = (uint64_t(1) << (size_ & 63)) - 1;
            if (!words_.empty()) words_.back() &= mask;
        }
    }
    int size_;
    std::vector<uint64_t> words_;
};

using VertexSet = Bitset;
using EdgeSet = Bitset;

} // namespace w4

#endif
