#include <idcode/codes.hpp>

#include <limits>
#include <unordered_map>

namespace idcode {

namespace {
    void check_ell(const Digraph & d, int ell)
    {
        if (ell < 1 || ell > d.order())
            throw Error(Err::EllOutOfRange, "ell " + std::to_string(ell) + " not in [1, " + std::to_string(d.order()) + "]");
    }

    void check_budget(const Digraph & d, int ell, std::uint64_t budget)
    {
        std::uint64_t k = subset_count(d.order(), ell);
        if (k > budget)
            throw Error(Err::ConfigLimit, std::to_string(k) + " subsets exceeds budget " + std::to_string(budget));
    }

    std::vector<VertexSet> closed_in_table(const Digraph & d)
    {
        std::vector<VertexSet> t;
        t.reserve(d.order());
        for (int v = 0; v < d.order(); ++v)
            t.push_back(d.closed_in_neighborhood(v));
        return t;
    }
}

SubsetEnumerator::SubsetEnumerator(int n, int ell) :
    _n(n), _ell(ell), _k(1), _cur(n), _valid(n >= 1 && ell >= 1)
{
    if (_valid)
        load_first_of_size(1);
}

void SubsetEnumerator::load_first_of_size(int k)
{
    _k = k;
    _idx.resize(k);
    for (int i = 0; i < k; ++i)
        _idx[i] = i;
    rebuild();
}

void SubsetEnumerator::rebuild()
{
    _cur = VertexSet(_n);
    for (int i : _idx)
        _cur.add(i);
}

void SubsetEnumerator::advance()
{
    // next k-combination in lexicographic order; when exhausted, move on to
    // size k+1
    int i = _k - 1;
    while (i >= 0 && _idx[i] == _n - _k + i)
        --i;
    if (i < 0) {
        if (_k >= _ell || _k >= _n) {
            _valid = false;
            return;
        }
        load_first_of_size(_k + 1);
        return;
    }
    ++_idx[i];
    for (int j = i + 1; j < _k; ++j)
        _idx[j] = _idx[j - 1] + 1;
    rebuild();
}

std::uint64_t subset_count(int n, int ell)
{
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t c = 1;   // C(n, k), starting at k = 0
    for (int k = 1; k <= ell && k <= n; ++k) {
        // c <- c * (n - k + 1) / k, watching for overflow
        std::uint64_t num = static_cast<std::uint64_t>(n - k + 1);
        if (c > cap / num)
            return cap;
        c = c * num / static_cast<std::uint64_t>(k);
        if (total > cap - c)
            return cap;
        total += c;
    }
    return total;
}

Verdict is_identifying_code(const Digraph & d, const VertexSet & code, int ell, std::uint64_t subset_budget)
{
    check_ell(d, ell);
    check_budget(d, ell, subset_budget);

    auto closed = closed_in_table(d);
    std::unordered_map<VertexSet, VertexSet, VertexSetHash> seen;
    seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(subset_count(d.order(), ell), 1u << 20)));

    for (SubsetEnumerator e(d.order(), ell); e.valid(); e.advance()) {
        const VertexSet & s = e.current();
        VertexSet trace(d.order());
        s.for_each([&](int v) { trace |= closed[v]; });
        trace &= code;
        auto [it, inserted] = seen.emplace(std::move(trace), s);
        if (! inserted)
            return {false, WitnessPair{it->second, s, code}};
    }
    return {true, std::nullopt};
}

Verdict admits(const Digraph & d, int ell, std::uint64_t subset_budget)
{
    return is_identifying_code(d, VertexSet::full(d.order()), ell, subset_budget);
}

int max_ell_upper_bound(const Digraph & d)
{
    int n = d.order();
    int bound = n;
    bool constrained = false;
    for (int u = 0; u < n; ++u) {
        if (d.out_degree(u) == 0)
            continue;
        constrained = true;
        int b = d.in_degree(u) + 1;
        // a digon through u tightens the bound by one
        bool on_digon = false;
        d.out_neighbors(u).for_each([&](int v) {
            if (d.has_arc(v, u))
                on_digon = true;
        });
        if (on_digon)
            b = d.in_degree(u);
        if (b < bound)
            bound = b;
    }
    return constrained ? bound : n;
}

SeparationInstance separation_instance(const Digraph & d, int ell, std::uint64_t subset_budget)
{
    check_ell(d, ell);
    check_budget(d, ell, subset_budget);

    auto closed = closed_in_table(d);
    std::vector<VertexSet> subsets, traces;
    for (SubsetEnumerator e(d.order(), ell); e.valid(); e.advance()) {
        const VertexSet & s = e.current();
        VertexSet t(d.order());
        s.for_each([&](int v) { t |= closed[v]; });
        subsets.push_back(s);
        traces.push_back(t);
    }

    SeparationInstance inst;
    inst.ell = ell;
    std::size_t k = subsets.size();
    inst.pairs.reserve(k * (k - 1) / 2);
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            VertexSet diff = traces[i] ^ traces[j];
            if (diff.empty())
                inst.inadmissible = true;
            inst.pairs.push_back({subsets[i], subsets[j], std::move(diff)});
        }
    return inst;
}

} // namespace idcode
