#ifndef IDCODE_VERTEX_SET_HPP
#define IDCODE_VERTEX_SET_HPP

#include <idcode/error.hpp>

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace idcode {

// Fixed-capacity bitset over vertices 0..n-1 of some ambient digraph. All
// algorithms in this library move sets of vertices around, so the operations
// here are the hot path: word-parallel and allocation-free.
class VertexSet {
public:
    static constexpr int max_vertices = 512;

    VertexSet() = default;

    explicit VertexSet(int n) : _n(n)
    {
        if (n < 0 || n > max_vertices)
            throw Error(Err::OutOfRange, "ambient size " + std::to_string(n) + " not in [0, " + std::to_string(max_vertices) + "]");
    }

    static VertexSet full(int n)
    {
        VertexSet s(n);
        for (int w = 0; w < s.n_words(); ++w)
            s._words[w] = ~std::uint64_t(0);
        s.trim();
        return s;
    }

    static VertexSet of(int n, std::initializer_list<int> vs)
    {
        VertexSet s(n);
        for (int v : vs)
            s.add(v);
        return s;
    }

    static VertexSet of(int n, const std::vector<int> & vs)
    {
        VertexSet s(n);
        for (int v : vs)
            s.add(v);
        return s;
    }

    int ambient_size() const { return _n; }

    bool contains(int v) const
    {
        if (v < 0 || v >= _n)
            return false;
        return (_words[v >> 6] >> (v & 63)) & 1;
    }

    void add(int v)
    {
        check_member(v);
        _words[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    void remove(int v)
    {
        check_member(v);
        _words[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const
    {
        int c = 0;
        for (int w = 0; w < n_words(); ++w)
            c += std::popcount(_words[w]);
        return c;
    }

    bool empty() const
    {
        for (int w = 0; w < n_words(); ++w)
            if (_words[w])
                return false;
        return true;
    }

    bool intersects(const VertexSet & o) const
    {
        for (int w = 0; w < n_words(); ++w)
            if (_words[w] & o._words[w])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet & o) const
    {
        for (int w = 0; w < n_words(); ++w)
            if (_words[w] & ~o._words[w])
                return false;
        return true;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (int w = 0; w < n_words(); ++w)
            _words[w] |= o._words[w];
        return *this;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (int w = 0; w < n_words(); ++w)
            _words[w] &= o._words[w];
        return *this;
    }

    VertexSet & operator^=(const VertexSet & o)
    {
        for (int w = 0; w < n_words(); ++w)
            _words[w] ^= o._words[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet & b) { return a ^= b; }

    // set difference: elements of *this not in o
    VertexSet minus(const VertexSet & o) const
    {
        VertexSet r = *this;
        for (int w = 0; w < r.n_words(); ++w)
            r._words[w] &= ~o._words[w];
        return r;
    }

    bool operator==(const VertexSet & o) const
    {
        if (_n != o._n)
            return false;
        for (int w = 0; w < n_words(); ++w)
            if (_words[w] != o._words[w])
                return false;
        return true;
    }

    bool operator!=(const VertexSet & o) const { return ! (*this == o); }

    // smallest member, or -1 if empty
    int first() const { return next(-1); }

    // smallest member strictly greater than `after`, or -1
    int next(int after) const
    {
        int v = after + 1;
        if (v >= _n)
            return -1;
        int w = v >> 6;
        std::uint64_t word = _words[w] >> (v & 63);
        if (word)
            return v + std::countr_zero(word);
        for (++w; w < n_words(); ++w)
            if (_words[w])
                return (w << 6) + std::countr_zero(_words[w]);
        return -1;
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (int w = 0; w < n_words(); ++w) {
            std::uint64_t word = _words[w];
            while (word) {
                f((w << 6) + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> r;
        r.reserve(count());
        for_each([&](int v) { r.push_back(v); });
        return r;
    }

    // "{0,2,5}", "{}" when empty
    std::string to_string() const
    {
        std::string r = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep)
                r += ',';
            r += std::to_string(v);
            sep = true;
        });
        return r + "}";
    }

    // lexicographic comparison of the sorted member sequences; <0, 0, >0
    static int compare_lex(const VertexSet & a, const VertexSet & b)
    {
        int x = a.first(), y = b.first();
        while (x != -1 && y != -1) {
            if (x != y)
                return x < y ? -1 : 1;
            x = a.next(x);
            y = b.next(y);
        }
        if (x == y)
            return 0;
        return x == -1 ? -1 : 1;
    }

    std::size_t hash() const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(_n);
        for (int w = 0; w < n_words(); ++w) {
            h ^= _words[w];
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }

private:
    int n_words() const { return (_n + 63) >> 6; }

    void check_member(int v) const
    {
        if (v < 0 || v >= _n)
            throw Error(Err::OutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(_n) + ")");
    }

    // clear bits at positions >= _n in the last word
    void trim()
    {
        int r = _n & 63;
        if (r != 0)
            _words[n_words() - 1] &= (std::uint64_t(1) << r) - 1;
    }

    int _n = 0;
    std::array<std::uint64_t, max_vertices / 64> _words{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet & s) const { return s.hash(); }
};

} // namespace idcode

#endif
