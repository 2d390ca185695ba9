#ifndef IDCODE_CODES_HPP
#define IDCODE_CODES_HPP

#include <idcode/digraph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace idcode {

// Enumerates the nonempty subsets of {0..n-1} of size at most ell, in the
// canonical order used everywhere for witnesses: ascending cardinality,
// then lexicographic on the sorted index sequence.
class SubsetEnumerator {
public:
    SubsetEnumerator(int n, int ell);

    bool valid() const { return _valid; }
    const VertexSet & current() const { return _cur; }
    void advance();

private:
    int _n, _ell, _k;
    std::vector<int> _idx;
    VertexSet _cur;
    bool _valid;

    void load_first_of_size(int k);
    void rebuild();
};

// sum of C(n, k) for k = 1..ell, saturating at uint64 max
std::uint64_t subset_count(int n, int ell);

// Guard for the exhaustive pair scan: how many subsets we are willing to
// enumerate before refusing with ConfigLimit.
inline constexpr std::uint64_t default_subset_budget = 5'000'000;

// A pair of vertex sets that the code fails to tell apart, plus the code
// against which they collided. Both closed in-neighborhoods meet the code
// in the same trace.
struct WitnessPair {
    VertexSet x, y;   // x enumerated before y in canonical order
    VertexSet code;
};

struct Verdict {
    bool ok;
    std::optional<WitnessPair> witness;   // present iff !ok

    explicit operator bool() const { return ok; }
};

// Does `code` distinguish every two distinct nonempty subsets of size at
// most ell by their code-restricted closed in-neighborhoods? The first
// collision in canonical order is returned as the witness.
Verdict is_identifying_code(const Digraph & d, const VertexSet & code, int ell,
        std::uint64_t subset_budget = default_subset_budget);

// Does any code exist at all? Equivalent to the whole vertex set working.
Verdict admits(const Digraph & d, int ell,
        std::uint64_t subset_budget = default_subset_budget);

// Largest ell not ruled out by in-degrees: min over vertices with an
// out-arc of d-(u)+1, tightened to d-(u) on digons. Arcless digraphs are
// unconstrained; reported as n.
int max_ell_upper_bound(const Digraph & d);

// One row of the hitting-set reduction: subsets x, y and the symmetric
// difference of their closed in-neighborhoods. A code works iff it hits
// every diff; an empty diff means no code can.
struct SeparationPair {
    VertexSet x, y, diff;
};

struct SeparationInstance {
    int ell;
    std::vector<SeparationPair> pairs;   // all unordered pairs, enumeration order
    bool inadmissible = false;           // some diff is empty
};

SeparationInstance separation_instance(const Digraph & d, int ell,
        std::uint64_t subset_budget = default_subset_budget);

} // namespace idcode

#endif
