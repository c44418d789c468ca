#pragma once

#include <cstdint>
#include <vector>

namespace equidom {

// Subset of {0..n-1} backed by 64-bit words. Iteration is in ascending id
// order; all set operations require both operands to share the universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void insert(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const { return next(-1); }
    // Smallest member greater than v, or -1.
    int next(int v) const {
        int w = (v + 1) >> 6;
        if (w >= static_cast<int>(words_.size())) return -1;
        std::uint64_t cur = words_[w] & (~0ULL << ((v + 1) & 63));
        while (true) {
            if (cur) return (w << 6) + __builtin_ctzll(cur);
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet of(int universe, std::initializer_list<int> ids) {
        VertexSet s(universe);
        for (int v : ids) s.insert(v);
        return s;
    }
    static VertexSet of(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.insert(v);
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    struct iterator {
        const VertexSet* set;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = set->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace equidom
