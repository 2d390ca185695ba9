#include <idcode/generators.hpp>

#include <algorithm>
#include <limits>
#include <random>

namespace idcode {

namespace {
    constexpr std::uint64_t u64_max = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t checked_pow(std::uint64_t base, int exp)
    {
        std::uint64_t r = 1;
        for (int i = 0; i < exp; ++i) {
            if (base != 0 && r > u64_max / base)
                throw Error(Err::TooLarge, "family size overflows");
            r *= base;
        }
        return r;
    }
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (c > u64_max / num)
            return u64_max;
        c = c * num / static_cast<std::uint64_t>(i);
    }
    return c;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank)
{
    if (k < 0 || k > n || rank >= binomial(n, k))
        throw Error(Err::OutOfRange, "combination rank out of range");
    std::vector<int> out;
    out.reserve(k);
    int x = 0;
    for (int i = 0; i < k; ++i) {
        for (;;) {
            std::uint64_t c = binomial(n - x - 1, k - i - 1);
            if (rank < c)
                break;
            rank -= c;
            ++x;
        }
        out.push_back(x++);
    }
    return out;
}

Digraph directed_cycle(int n)
{
    if (n < 2)
        throw Error(Err::BadSize, "directed cycle needs n >= 2");
    DigraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_arc(v, (v + 1) % n);
    return b.build();
}

AllDigraphs::AllDigraphs(int n) : _n(n)
{
    if (n < 1 || n > 5)
        throw Error(Err::BadSize, "exhaustive digraph family limited to 1 <= n <= 5");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                _pairs.emplace_back(u, v);
}

Digraph AllDigraphs::at(std::uint64_t index) const
{
    if (index >= count())
        throw Error(Err::OutOfRange, "index " + std::to_string(index) + " out of range");
    DigraphBuilder b(_n);
    for (std::size_t t = 0; t < _pairs.size(); ++t)
        if ((index >> t) & 1)
            b.add_arc(_pairs[t].first, _pairs[t].second);
    return b.build();
}

OneInRegularDigraphs::OneInRegularDigraphs(int n) : _n(n)
{
    if (n < 2 || n > 8)
        throw Error(Err::BadSize, "1-in-regular family limited to 2 <= n <= 8");
}

std::uint64_t OneInRegularDigraphs::count() const
{
    return checked_pow(_n - 1, _n);
}

Digraph OneInRegularDigraphs::at(std::uint64_t index) const
{
    if (index >= count())
        throw Error(Err::OutOfRange, "index " + std::to_string(index) + " out of range");
    std::uint64_t base = _n - 1;
    DigraphBuilder b(_n);
    for (int v = _n - 1; v >= 0; --v) {
        int g = static_cast<int>(index % base);
        index /= base;
        int w = g < v ? g : g + 1;   // skip the loop choice
        b.add_arc(w, v);
    }
    return b.build();
}

DInRegularDigraphs::DInRegularDigraphs(int n, int d) : _n(n), _d(d)
{
    if (d < 1 || d >= n || n > 7)
        throw Error(Err::BadSize, "d-in-regular family needs 1 <= d < n <= 7");
}

std::uint64_t DInRegularDigraphs::count() const
{
    return checked_pow(binomial(_n - 1, _d), _n);
}

Digraph DInRegularDigraphs::at(std::uint64_t index) const
{
    if (index >= count())
        throw Error(Err::OutOfRange, "index " + std::to_string(index) + " out of range");
    std::uint64_t base = binomial(_n - 1, _d);
    DigraphBuilder b(_n);
    for (int v = _n - 1; v >= 0; --v) {
        std::uint64_t digit = index % base;
        index /= base;
        for (int l : unrank_combination(_n - 1, _d, digit))
            b.add_arc(l < v ? l : l + 1, v);
    }
    return b.build();
}

Digraph random_digraph(int n, double arc_probability, std::uint64_t seed)
{
    if (n < 1 || n > VertexSet::max_vertices)
        throw Error(Err::BadSize, "order " + std::to_string(n) + " out of range");
    if (! (arc_probability >= 0.0 && arc_probability <= 1.0))
        throw Error(Err::BadSpec, "arc probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_probability);
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng))
                b.add_arc(u, v);
    return b.build();
}

Digraph random_d_in_regular(int n, int d, std::uint64_t seed)
{
    if (n < 2 || n > 64)
        throw Error(Err::BadSize, "order " + std::to_string(n) + " out of range for regular sampling");
    if (d < 1 || d >= n)
        throw Error(Err::BadSpec, "need 1 <= d < n");
    std::uint64_t base = binomial(n - 1, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, base - 1);
    DigraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        for (int l : unrank_combination(n - 1, d, pick(rng)))
            b.add_arc(l < v ? l : l + 1, v);
    return b.build();
}

UndirectedGraph named_graph(const std::string & name)
{
    if (name == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);          // outer cycle
            edges.emplace_back(i, i + 5);                // spoke
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        }
        return UndirectedGraph::from_edge_list(10, edges);
    }
    if (name == "heawood") {
        // LCF [5, -5]^7: a 14-cycle plus a chord i -- i+5 from every even i
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 14; ++i)
            edges.emplace_back(i, (i + 1) % 14);
        for (int i = 0; i < 14; i += 2)
            edges.emplace_back(i, (i + 5) % 14);
        return UndirectedGraph::from_edge_list(14, edges);
    }
    if (name.rfind("cycle:", 0) == 0) {
        int n;
        try {
            n = std::stoi(name.substr(6));
        }
        catch (const std::exception &) {
            throw Error(Err::UnknownName, "bad cycle length in '" + name + "'");
        }
        if (n < 3)
            throw Error(Err::BadSize, "undirected cycle needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return UndirectedGraph::from_edge_list(n, edges);
    }
    if (name.rfind("complete_bipartite:", 0) == 0) {
        std::string params = name.substr(19);
        std::size_t comma = params.find(',');
        int r = 0, s = 0;
        try {
            if (comma == std::string::npos)
                throw std::invalid_argument("no comma");
            r = std::stoi(params.substr(0, comma));
            s = std::stoi(params.substr(comma + 1));
        }
        catch (const std::exception &) {
            throw Error(Err::UnknownName, "bad part sizes in '" + name + "'");
        }
        if (r < 1 || s < 1 || r + s > VertexSet::max_vertices)
            throw Error(Err::BadSize, "bad part sizes in '" + name + "'");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j)
                edges.emplace_back(i, r + j);
        return UndirectedGraph::from_edge_list(r + s, edges);
    }
    throw Error(Err::UnknownName, "unknown graph '" + name + "'");
}

void GeneratorSpec::validate() const
{
    switch (family) {
        case Family::DirectedCycle:
            if (n < 2)
                throw Error(Err::BadSize, "directed cycle needs n >= 2");
            return;
        case Family::All:
            if (n < 1 || n > 5)
                throw Error(Err::BadSize, "exhaustive family limited to n <= 5");
            return;
        case Family::OneInRegular:
            if (n < 2 || n > 8)
                throw Error(Err::BadSize, "1-in-regular family limited to n <= 8");
            return;
        case Family::DInRegular:
            if (! d)
                throw Error(Err::BadSpec, "d-in-regular needs d");
            if (*d < 1 || *d >= n || n > 7)
                throw Error(Err::BadSize, "d-in-regular family needs 1 <= d < n <= 7");
            return;
        case Family::Random:
            if (! seed)
                throw Error(Err::BadSpec, "random family needs an explicit seed");
            if (! samples || *samples < 1)
                throw Error(Err::BadSpec, "random family needs samples >= 1");
            if (d && p)
                throw Error(Err::BadSpec, "choose either d or p, not both");
            if (d && (*d < 1 || *d >= n || n > 64))
                throw Error(Err::BadSize, "random d-in-regular needs 1 <= d < n <= 64");
            if (! d && (n < 2 || n > VertexSet::max_vertices))
                throw Error(Err::BadSize, "random family needs 2 <= n <= 512");
            if (p && ! (*p >= 0.0 && *p <= 1.0))
                throw Error(Err::BadSpec, "arc probability must lie in [0, 1]");
            return;
        case Family::Named:
            if (! name)
                throw Error(Err::BadSpec, "named family needs a name");
            named_graph(*name);   // validates the name itself
            return;
    }
    throw Error(Err::BadSpec, "unknown family");
}

std::string GeneratorSpec::describe() const
{
    switch (family) {
        case Family::DirectedCycle:
            return "directed cycle n=" + std::to_string(n);
        case Family::All:
            return "all digraphs n<=" + std::to_string(n);
        case Family::OneInRegular:
            return "1-in-regular digraphs n=2.." + std::to_string(n);
        case Family::DInRegular:
            return std::to_string(*d) + "-in-regular digraphs n=" + std::to_string(*d + 1) + ".." + std::to_string(n);
        case Family::Random: {
            std::string r = "random ";
            if (d)
                r += std::to_string(*d) + "-in-regular n=" + std::to_string(n);
            else if (p)
                r += "digraphs n=" + std::to_string(n);
            else
                r += "digraphs n<=" + std::to_string(n);
            return r + " samples=" + std::to_string(*samples) + " seed=" + std::to_string(*seed);
        }
        case Family::Named:
            return "lift of " + *name;
    }
    return "?";
}

Universe::Universe(GeneratorSpec spec) : _spec(std::move(spec))
{
    _spec.validate();
    auto push = [&](std::uint64_t count, int order) {
        _blocks.push_back({_total, count, order});
        _total += count;
    };
    switch (_spec.family) {
        case GeneratorSpec::Family::All:
            for (int k = 1; k <= _spec.n; ++k)
                push(AllDigraphs(k).count(), k);
            break;
        case GeneratorSpec::Family::OneInRegular:
            for (int k = 2; k <= _spec.n; ++k)
                push(OneInRegularDigraphs(k).count(), k);
            break;
        case GeneratorSpec::Family::DInRegular:
            for (int k = *_spec.d + 1; k <= _spec.n; ++k)
                push(DInRegularDigraphs(k, *_spec.d).count(), k);
            break;
        case GeneratorSpec::Family::Random:
            push(*_spec.samples, _spec.n);
            break;
        case GeneratorSpec::Family::DirectedCycle:
        case GeneratorSpec::Family::Named:
            push(1, _spec.n);
            break;
    }
}

Digraph Universe::at(std::uint64_t index) const
{
    if (index >= _total)
        throw Error(Err::OutOfRange, "universe index " + std::to_string(index) + " out of range");
    const Block * blk = &_blocks.back();
    for (const auto & b : _blocks)
        if (index < b.offset + b.count) {
            blk = &b;
            break;
        }
    std::uint64_t local = index - blk->offset;

    switch (_spec.family) {
        case GeneratorSpec::Family::All:
            return AllDigraphs(blk->n).at(local);
        case GeneratorSpec::Family::OneInRegular:
            return OneInRegularDigraphs(blk->n).at(local);
        case GeneratorSpec::Family::DInRegular:
            return DInRegularDigraphs(blk->n, *_spec.d).at(local);
        case GeneratorSpec::Family::Random: {
            std::uint64_t s = splitmix64(*_spec.seed + 0x9e3779b97f4a7c15ull * (local + 1));
            if (_spec.d)
                return random_d_in_regular(_spec.n, *_spec.d, s);
            if (_spec.p)
                return random_digraph(_spec.n, *_spec.p, s);
            // vary order and density per draw
            std::mt19937_64 rng(s);
            int order = std::uniform_int_distribution<int>(2, _spec.n)(rng);
            double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
            return random_digraph(order, density, rng());
        }
        case GeneratorSpec::Family::DirectedCycle:
            return directed_cycle(_spec.n);
        case GeneratorSpec::Family::Named:
            return symmetric_lift(named_graph(*_spec.name));
    }
    throw Error(Err::BadSpec, "unknown family");
}

} // namespace idcode
