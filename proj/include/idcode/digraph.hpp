#ifndef IDCODE_DIGRAPH_HPP
#define IDCODE_DIGRAPH_HPP

#include <idcode/vertex_set.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idcode {

// Loopless digraph on vertices 0..n-1, no parallel arcs, immutable once
// built. Adjacency is stored both ways as bitsets so in-neighbourhood
// unions and arc tests are O(1) words.
class Digraph {
public:
    static Digraph from_arc_list(int n, const std::vector<std::pair<int, int>> & arcs);

    int order() const { return _n; }
    int arc_count() const { return _m; }

    const VertexSet & in_neighbors(int v) const { check(v); return _in[v]; }
    const VertexSet & out_neighbors(int v) const { check(v); return _out[v]; }

    int in_degree(int v) const { return in_neighbors(v).count(); }
    int out_degree(int v) const { return out_neighbors(v).count(); }

    bool has_arc(int u, int v) const { check(u); return _out[u].contains(v); }

    // N-[v] = {v} union N-(v)
    VertexSet closed_in_neighborhood(int v) const
    {
        VertexSet r = in_neighbors(v);
        r.add(v);
        return r;
    }

    // arcs in lexicographic (u, v) order
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const Digraph & o) const { return _n == o._n && _out == o._out; }

private:
    friend class DigraphBuilder;
    Digraph(int n, int m, std::vector<VertexSet> in, std::vector<VertexSet> out) :
        _n(n), _m(m), _in(std::move(in)), _out(std::move(out))
    {
    }

    void check(int v) const
    {
        if (v < 0 || v >= _n)
            throw Error(Err::OutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(_n) + ")");
    }

    int _n, _m;
    std::vector<VertexSet> _in, _out;
};

// All mutation happens here; build() hands over an immutable Digraph.
class DigraphBuilder {
public:
    explicit DigraphBuilder(int n);

    DigraphBuilder & add_arc(int u, int v);
    bool has_arc(int u, int v) const { return _out[u].contains(v); }
    int order() const { return _n; }

    Digraph build() const { return Digraph(_n, _m, _in, _out); }

private:
    int _n, _m = 0;
    std::vector<VertexSet> _in, _out;
};

// Simple undirected graph; exists to feed symmetric_lift and the named
// constructions, so it only carries what those need.
class UndirectedGraph {
public:
    static UndirectedGraph from_edge_list(int n, const std::vector<std::pair<int, int>> & edges);

    int order() const { return _n; }
    int edge_count() const { return _m; }
    const VertexSet & neighbors(int v) const { check(v); return _adj[v]; }
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { check(u); return _adj[u].contains(v); }

    // edges as (u, v) with u < v, lexicographic
    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;

private:
    UndirectedGraph(int n, int m, std::vector<VertexSet> adj) : _n(n), _m(m), _adj(std::move(adj)) {}

    void check(int v) const
    {
        if (v < 0 || v >= _n)
            throw Error(Err::OutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(_n) + ")");
    }

    int _n, _m;
    std::vector<VertexSet> _adj;
};

// Length of a shortest directed cycle, or none. A dedicated type rather
// than optional<int> so that "at least k" cannot silently compare wrong
// for acyclic digraphs.
class Girth {
public:
    static Girth finite(int len) { Girth g; g._len = len; return g; }
    static Girth infinite() { return Girth(); }

    bool is_finite() const { return _len > 0; }

    int length() const
    {
        if (! is_finite())
            throw Error(Err::BadSpec, "girth is infinite");
        return _len;
    }

    // infinite girth exceeds every threshold
    bool at_least(int k) const { return ! is_finite() || _len >= k; }

    bool operator==(const Girth & o) const { return _len == o._len; }

    std::string to_string() const { return is_finite() ? std::to_string(_len) : "infinite"; }

private:
    int _len = 0;
};

struct DegreeProfile {
    std::vector<int> in_degree, out_degree;
    int min_in = 0, min_out = 0, max_in = 0, max_out = 0;
    // set when every vertex has in-degree d (resp. both degrees d)
    std::optional<int> in_regular_d, regular_d;
};

DegreeProfile degree_profile(const Digraph & d);

// N-[xs] = union over x in xs of N-[x]
VertexSet closed_in_neighborhood(const Digraph & d, const VertexSet & xs);

Girth girth(const Digraph & d);

// shortest directed cycle through v specifically
Girth shortest_cycle_through(const Digraph & d, int v);

// unordered pairs {u, v} with arcs both ways, u < v, lexicographic
std::vector<std::pair<int, int>> digons(const Digraph & d);

// no digons
bool is_oriented(const Digraph & d);

// unordered pairs u < v with N-[u] == N-[v], lexicographic
std::vector<std::pair<int, int>> twins(const Digraph & d);

bool is_twin_free(const Digraph & d);

// each edge becomes a digon
Digraph symmetric_lift(const UndirectedGraph & g);

// shortest cycle of the undirected graph (3 or more), or infinite
Girth undirected_girth(const UndirectedGraph & g);

} // namespace idcode

#endif
