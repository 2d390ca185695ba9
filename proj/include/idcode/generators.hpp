#ifndef IDCODE_GENERATORS_HPP
#define IDCODE_GENERATORS_HPP

#include <idcode/digraph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idcode {

// C(n, k), saturating at uint64 max
std::uint64_t binomial(int n, int k);

// k-subset of {0..n-1} with the given lexicographic rank
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

Digraph directed_cycle(int n);   // n >= 2; arcs v -> v+1 mod n

// The exhaustive families are index-addressable (count / at) rather than
// iterator-shaped so that verification sweeps can be sharded by index
// range deterministically.

// all 2^(n(n-1)) labeled loopless digraphs on n vertices; bit t of the
// index is the t-th ordered pair in lexicographic order
class AllDigraphs {
public:
    explicit AllDigraphs(int n);   // 1 <= n <= 5

    std::uint64_t count() const { return std::uint64_t(1) << (_n * (_n - 1)); }
    Digraph at(std::uint64_t index) const;
    int order() const { return _n; }

private:
    int _n;
    std::vector<std::pair<int, int>> _pairs;
};

// every vertex has in-degree exactly 1; count (n-1)^n, index read as the
// in-neighbor choice vector with vertex 0 most significant
class OneInRegularDigraphs {
public:
    explicit OneInRegularDigraphs(int n);   // 2 <= n <= 8

    std::uint64_t count() const;
    Digraph at(std::uint64_t index) const;
    int order() const { return _n; }

private:
    int _n;
};

// every vertex has in-degree exactly d; count C(n-1,d)^n, index read as
// the vector of in-neighborhood combination ranks, vertex 0 most
// significant
class DInRegularDigraphs {
public:
    DInRegularDigraphs(int n, int d);   // 1 <= d < n <= 7

    std::uint64_t count() const;
    Digraph at(std::uint64_t index) const;
    int order() const { return _n; }
    int degree() const { return _d; }

private:
    int _n, _d;
};

// each ordered pair becomes an arc independently with the given
// probability; deterministic for a fixed seed and build
Digraph random_digraph(int n, double arc_probability, std::uint64_t seed);

// in-neighborhood of each vertex drawn uniformly among d-subsets
Digraph random_d_in_regular(int n, int d, std::uint64_t seed);

// "petersen", "heawood", "cycle:<n>", "complete_bipartite:<r>,<s>"
UndirectedGraph named_graph(const std::string & name);

struct GeneratorSpec {
    enum class Family { DirectedCycle, All, OneInRegular, DInRegular, Random, Named };

    Family family;
    int n = 0;
    std::optional<int> d;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> samples;
    std::optional<std::string> name;

    void validate() const;   // BadSpec / BadSize when the combination is unusable
    std::string describe() const;
};

// A spec flattened into one indexable stream of digraphs. Exhaustive
// families concatenate all admissible orders up to spec.n; random is
// spec.samples independent seeded draws (order n, or per-draw order in
// [2, n] and density in [0.1, 0.9] when neither d nor p is given); cycle
// and named yield a single digraph (named graphs via their symmetric
// lift, each edge becoming a digon).
class Universe {
public:
    explicit Universe(GeneratorSpec spec);

    std::uint64_t count() const { return _total; }
    Digraph at(std::uint64_t index) const;
    std::string describe() const { return _spec.describe(); }

private:
    GeneratorSpec _spec;
    struct Block {
        std::uint64_t offset, count;
        int n;
    };
    std::vector<Block> _blocks;
    std::uint64_t _total = 0;
};

} // namespace idcode

#endif
