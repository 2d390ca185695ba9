#include <idcode/mincode.hpp>

#include <algorithm>
#include <unordered_set>

namespace idcode {

namespace {
    struct DiffCollection {
        std::vector<VertexSet> diffs;
        bool inadmissible = false;
    };

    // Distinct nonempty symmetric differences of closed in-neighborhood
    // traces, sorted by (size, lex). Deduplicated up front: the hitting
    // structure only depends on the set of distinct diffs.
    DiffCollection collect_diffs(const Digraph & d, int ell)
    {
        if (ell < 1 || ell > d.order())
            throw Error(Err::EllOutOfRange, "ell " + std::to_string(ell) + " not in [1, " + std::to_string(d.order()) + "]");
        if (subset_count(d.order(), ell) > default_subset_budget)
            throw Error(Err::ConfigLimit, "subset universe exceeds " + std::to_string(default_subset_budget));

        DiffCollection out;
        std::vector<VertexSet> traces;
        for (SubsetEnumerator e(d.order(), ell); e.valid(); e.advance()) {
            VertexSet t(d.order());
            e.current().for_each([&](int v) {
                t |= d.in_neighbors(v);
                t.add(v);
            });
            traces.push_back(std::move(t));
        }

        std::unordered_set<VertexSet, VertexSetHash> seen;
        for (std::size_t j = 1; j < traces.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                VertexSet diff = traces[i] ^ traces[j];
                if (diff.empty()) {
                    out.inadmissible = true;
                    return out;
                }
                if (seen.insert(diff).second)
                    out.diffs.push_back(std::move(diff));
            }

        std::sort(out.diffs.begin(), out.diffs.end(), [](const VertexSet & a, const VertexSet & b) {
            int ca = a.count(), cb = b.count();
            if (ca != cb)
                return ca < cb;
            return VertexSet::compare_lex(a, b) < 0;
        });
        return out;
    }

    // greedy cover: max hit count, lowest vertex on ties
    VertexSet greedy_cover(int n, const std::vector<VertexSet> & diffs)
    {
        VertexSet chosen(n);
        std::vector<char> covered(diffs.size(), 0);
        std::size_t left = diffs.size();
        std::vector<int> freq(n);
        while (left > 0) {
            std::fill(freq.begin(), freq.end(), 0);
            for (std::size_t i = 0; i < diffs.size(); ++i)
                if (! covered[i])
                    diffs[i].for_each([&](int v) { ++freq[v]; });
            int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
            chosen.add(v);
            for (std::size_t i = 0; i < diffs.size(); ++i)
                if (! covered[i] && diffs[i].contains(v)) {
                    covered[i] = 1;
                    --left;
                }
        }
        return chosen;
    }

    struct Solver {
        int n;
        const std::vector<VertexSet> & diffs;
        std::uint64_t budget;
        VertexSet best;
        int best_size;
        std::uint64_t nodes = 0;
        bool exceeded = false;
        std::vector<int> freq;

        Solver(int n_, const std::vector<VertexSet> & diffs_, std::uint64_t budget_, const VertexSet & incumbent) :
            n(n_), diffs(diffs_), budget(budget_), best(n_), best_size(0), freq(n_)
        {
            best = incumbent;
            best_size = best.count();
        }

        // diffs that nothing in `used` can ever hit must be hit by pairwise
        // disjoint fresh vertices
        int lower_bound(const std::vector<int> & active, const VertexSet & excluded)
        {
            VertexSet used(n);
            int lb = 0;
            for (int idx : active) {
                VertexSet avail = diffs[idx].minus(excluded);
                if (! avail.intersects(used)) {
                    ++lb;
                    used |= avail;
                }
            }
            return lb;
        }

        void search(VertexSet chosen, VertexSet excluded, std::vector<int> active)
        {
            if (exceeded)
                return;
            if (++nodes > budget) {
                exceeded = true;
                return;
            }

            // unit propagation: a diff whose only non-excluded vertex is v
            // forces v into the code
            for (;;) {
                std::vector<int> still;
                still.reserve(active.size());
                int unit = -1;
                for (int idx : active) {
                    if (diffs[idx].intersects(chosen))
                        continue;
                    VertexSet avail = diffs[idx].minus(excluded);
                    if (avail.empty())
                        return;   // infeasible under these exclusions
                    if (unit == -1 && avail.count() == 1)
                        unit = avail.first();
                    still.push_back(idx);
                }
                active = std::move(still);
                if (unit == -1)
                    break;
                chosen.add(unit);
            }

            int csize = chosen.count();
            if (active.empty()) {
                if (csize < best_size) {
                    best = chosen;
                    best_size = csize;
                }
                return;
            }
            if (csize + lower_bound(active, excluded) >= best_size)
                return;

            // branch on the vertex hitting the most active diffs
            std::fill(freq.begin(), freq.end(), 0);
            for (int idx : active)
                diffs[idx].minus(excluded).for_each([&](int v) { ++freq[v]; });
            int v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

            VertexSet with = chosen;
            with.add(v);
            search(std::move(with), excluded, active);

            VertexSet without = excluded;
            without.add(v);
            search(std::move(chosen), std::move(without), std::move(active));
        }
    };
}

SolveResult minimum_identifying_code(const Digraph & d, int ell, std::uint64_t node_budget)
{
    auto collection = collect_diffs(d, ell);
    if (collection.inadmissible)
        return {SolveResult::Status::NotAdmissible, std::nullopt, 0};

    int n = d.order();
    VertexSet incumbent = greedy_cover(n, collection.diffs);
    if (collection.diffs.empty())
        return {SolveResult::Status::Found, incumbent, 0};

    Solver solver(n, collection.diffs, node_budget, incumbent);
    std::vector<int> all(collection.diffs.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    solver.search(VertexSet(n), VertexSet(n), std::move(all));

    return {solver.exceeded ? SolveResult::Status::BudgetExceeded : SolveResult::Status::Found,
            solver.best, solver.nodes};
}

SolveResult greedy_code(const Digraph & d, int ell)
{
    auto collection = collect_diffs(d, ell);
    if (collection.inadmissible)
        return {SolveResult::Status::NotAdmissible, std::nullopt, 0};
    return {SolveResult::Status::Found, greedy_cover(d.order(), collection.diffs), 0};
}

} // namespace idcode
