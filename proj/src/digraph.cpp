#include <idcode/digraph.hpp>

#include <algorithm>
#include <queue>

namespace idcode {

DigraphBuilder::DigraphBuilder(int n) : _n(n)
{
    if (n < 1 || n > VertexSet::max_vertices)
        throw Error(Err::BadSize, "order " + std::to_string(n) + " not in [1, " + std::to_string(VertexSet::max_vertices) + "]");
    _in.assign(n, VertexSet(n));
    _out.assign(n, VertexSet(n));
}

DigraphBuilder & DigraphBuilder::add_arc(int u, int v)
{
    if (u < 0 || u >= _n || v < 0 || v >= _n)
        throw Error(Err::OutOfRange, "arc (" + std::to_string(u) + ", " + std::to_string(v) + ") leaves [0, " + std::to_string(_n) + ")");
    if (u == v)
        throw Error(Err::LoopArc, "loop at vertex " + std::to_string(u));
    if (_out[u].contains(v))
        throw Error(Err::DuplicateArc, "arc (" + std::to_string(u) + ", " + std::to_string(v) + ") repeated");
    _out[u].add(v);
    _in[v].add(u);
    ++_m;
    return *this;
}

Digraph Digraph::from_arc_list(int n, const std::vector<std::pair<int, int>> & arcs)
{
    DigraphBuilder b(n);
    for (auto [u, v] : arcs)
        b.add_arc(u, v);
    return b.build();
}

std::vector<std::pair<int, int>> Digraph::arcs() const
{
    std::vector<std::pair<int, int>> r;
    r.reserve(_m);
    for (int u = 0; u < _n; ++u)
        _out[u].for_each([&](int v) { r.emplace_back(u, v); });
    return r;
}

UndirectedGraph UndirectedGraph::from_edge_list(int n, const std::vector<std::pair<int, int>> & edges)
{
    if (n < 1 || n > VertexSet::max_vertices)
        throw Error(Err::BadSize, "order " + std::to_string(n) + " not in [1, " + std::to_string(VertexSet::max_vertices) + "]");
    std::vector<VertexSet> adj(n, VertexSet(n));
    int m = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Err::OutOfRange, "edge {" + std::to_string(u) + ", " + std::to_string(v) + "} leaves [0, " + std::to_string(n) + ")");
        if (u == v)
            throw Error(Err::LoopArc, "loop edge at vertex " + std::to_string(u));
        if (adj[u].contains(v))
            throw Error(Err::DuplicateArc, "edge {" + std::to_string(u) + ", " + std::to_string(v) + "} repeated");
        adj[u].add(v);
        adj[v].add(u);
        ++m;
    }
    return UndirectedGraph(n, m, std::move(adj));
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const
{
    std::vector<std::pair<int, int>> r;
    r.reserve(_m);
    for (int u = 0; u < _n; ++u)
        _adj[u].for_each([&](int v) {
            if (u < v)
                r.emplace_back(u, v);
        });
    return r;
}

int UndirectedGraph::min_degree() const
{
    int d = _n;
    for (int v = 0; v < _n; ++v)
        d = std::min(d, degree(v));
    return d;
}

DegreeProfile degree_profile(const Digraph & d)
{
    DegreeProfile p;
    int n = d.order();
    p.in_degree.resize(n);
    p.out_degree.resize(n);
    for (int v = 0; v < n; ++v) {
        p.in_degree[v] = d.in_degree(v);
        p.out_degree[v] = d.out_degree(v);
    }
    p.min_in = *std::min_element(p.in_degree.begin(), p.in_degree.end());
    p.max_in = *std::max_element(p.in_degree.begin(), p.in_degree.end());
    p.min_out = *std::min_element(p.out_degree.begin(), p.out_degree.end());
    p.max_out = *std::max_element(p.out_degree.begin(), p.out_degree.end());
    if (p.min_in == p.max_in)
        p.in_regular_d = p.min_in;
    if (p.in_regular_d && p.min_out == p.max_out && p.min_out == p.min_in)
        p.regular_d = p.min_in;
    return p;
}

VertexSet closed_in_neighborhood(const Digraph & d, const VertexSet & xs)
{
    VertexSet r(d.order());
    xs.for_each([&](int x) {
        r |= d.in_neighbors(x);
        r.add(x);
    });
    return r;
}

Girth shortest_cycle_through(const Digraph & d, int v)
{
    // BFS forward from v; first time we re-enter v closes a shortest cycle
    // through it.
    int n = d.order();
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (! q.empty()) {
        int u = q.front();
        q.pop();
        if (d.has_arc(u, v))
            return Girth::finite(dist[u] + 1);
        d.out_neighbors(u).for_each([&](int w) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        });
    }
    return Girth::infinite();
}

Girth girth(const Digraph & d)
{
    Girth best = Girth::infinite();
    for (int v = 0; v < d.order(); ++v) {
        Girth g = shortest_cycle_through(d, v);
        if (g.is_finite() && (! best.is_finite() || g.length() < best.length()))
            best = g;
    }
    return best;
}

std::vector<std::pair<int, int>> digons(const Digraph & d)
{
    std::vector<std::pair<int, int>> r;
    for (int u = 0; u < d.order(); ++u)
        d.out_neighbors(u).for_each([&](int v) {
            if (u < v && d.has_arc(v, u))
                r.emplace_back(u, v);
        });
    return r;
}

bool is_oriented(const Digraph & d)
{
    for (int u = 0; u < d.order(); ++u) {
        bool digon = false;
        d.out_neighbors(u).for_each([&](int v) {
            if (d.has_arc(v, u))
                digon = true;
        });
        if (digon)
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> twins(const Digraph & d)
{
    int n = d.order();
    std::vector<VertexSet> closed;
    closed.reserve(n);
    for (int v = 0; v < n; ++v)
        closed.push_back(d.closed_in_neighborhood(v));
    std::vector<std::pair<int, int>> r;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (closed[u] == closed[v])
                r.emplace_back(u, v);
    return r;
}

bool is_twin_free(const Digraph & d)
{
    return twins(d).empty();
}

Digraph symmetric_lift(const UndirectedGraph & g)
{
    DigraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) {
        b.add_arc(u, v);
        b.add_arc(v, u);
    }
    return b.build();
}

Girth undirected_girth(const UndirectedGraph & g)
{
    // BFS from every vertex; a non-tree edge touching the frontier closes a
    // cycle. Standard trick: track BFS parents to avoid counting an edge
    // back to the parent as a 2-cycle.
    int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            g.neighbors(u).for_each([&](int w) {
                if (w == parent[u])
                    return;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
                else {
                    // non-tree edge; dist sums never undercut the girth, and
                    // rooting at a shortest cycle attains it
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best)
                        best = len;
                }
            });
        }
    }
    return best == -1 ? Girth::infinite() : Girth::finite(best);
}

} // namespace idcode
