#ifndef IDCODE_MINCODE_HPP
#define IDCODE_MINCODE_HPP

#include <idcode/codes.hpp>

namespace idcode {

inline constexpr std::uint64_t default_node_budget = 10'000'000;

struct SolveResult {
    enum class Status { Found, NotAdmissible, BudgetExceeded };

    Status status;
    std::optional<VertexSet> code;   // best code found; optimal when Found
    std::uint64_t nodes_explored = 0;

    int size() const { return code ? code->count() : -1; }
};

// Exact minimum identifying code via the hitting-set reduction: a code is
// exactly a set hitting every nonempty difference of the separation
// instance. Branch and bound with unit propagation, maximum-frequency
// branching, a greedy incumbent and a disjoint-difference lower bound.
// Deterministic. Returns BudgetExceeded (with the incumbent) once more
// than node_budget search nodes have been expanded.
SolveResult minimum_identifying_code(const Digraph & d, int ell,
        std::uint64_t node_budget = default_node_budget);

// Greedy cover of the same instance: repeatedly take the vertex hitting
// the most uncovered differences (lowest index on ties). Never better
// than the exact optimum, always a valid code when one exists.
SolveResult greedy_code(const Digraph & d, int ell);

} // namespace idcode

#endif
