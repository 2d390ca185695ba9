#ifndef IDCODE_HARNESS_HPP
#define IDCODE_HARNESS_HPP

#include <idcode/generators.hpp>
#include <idcode/patterns.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idcode {

// One failing instance. The digraph is in compact form so the line is
// enough to replay the check without the generator.
struct Counterexample {
    std::uint64_t index;
    std::string digraph;
    std::string expected, got;            // self-describing key=value tokens
    std::string witness_x = "-", witness_y = "-";
};

struct SuiteReport {
    std::string suite;
    std::string universe;
    std::uint64_t checked = 0, skipped = 0, failures = 0;
    std::vector<Counterexample> counterexamples;   // first few failures, by index
    double wall_seconds = 0;

    bool pass() const { return failures == 0; }

    // line-oriented and byte-stable across runs; no timings
    std::string machine_text() const;
    // for humans, includes the wall clock
    std::string human_text() const;
};

struct HarnessOptions {
    int jobs = 0;                             // 0 = hardware concurrency
    std::uint64_t max_counterexamples = 32;   // listed; failures are all counted
};

enum class Theorem2Case { I, II, III, IV, V };

// Twin-freeness is equivalent to admitting ell = 1; exhaustive over all
// digraphs up to n_max <= 5 vertices.
SuiteReport verify_remark2(int n_max = 4, HarnessOptions options = {});

// 1-in-regular digraphs admit ell = 2 exactly when the girth is at least
// 5; exhaustive for 2 <= n <= n_max <= 8.
SuiteReport verify_theorem3(int n_max = 6, HarnessOptions options = {});

// Sufficient conditions on a twin-free digraph with min in-degree d-:
//   I:   d- >= 2, no TT3, no F2            => admits d- - 1
//   II:  oriented, no TT3, no F2           => admits d-
//   III: free of a supplied pattern list   => admits d-
//   IV:  d- >= 2, min in-degree vertices off digons, supplied list
//                                          => admits d- + 1
//   V:   d- = 1, in-degree-1 vertices on no cycle shorter than 5,
//        supplied list                     => admits 2
// Cases III..V take their forbidden patterns from `patterns` (typically a
// user catalog); empty there means MissingCatalog. Instances failing the
// hypotheses are skipped and counted.
SuiteReport verify_theorem2(Theorem2Case c, const GeneratorSpec & universe,
        const std::vector<Pattern> & patterns = {}, HarnessOptions options = {});

// 2-in-regular digraphs: admits ell exactly when the derived obstruction
// catalog for (2, ell) has no match, for ell = 1 and 2; exhaustive over
// 3 <= n <= n_max <= 6.
SuiteReport verify_theorem4(int n_max = 5, HarnessOptions options = {});

// Same shape for ell = 3, plus a cross-check that the catalog reading
// agrees with the oriented + TT3-free formulation instance by instance.
// `sample`, when set, checks that many evenly strided instances instead
// of every one.
SuiteReport verify_theorem5(int n_max = 5, std::optional<std::uint64_t> sample = {},
        HarnessOptions options = {});

// Symmetric lifts: girth >= 7 gives ell = min degree, girth >= 5 gives
// ell = min degree - 1; checked on cycle:7, petersen, heawood.
SuiteReport verify_corollary3(HarnessOptions options = {});

// In-degree bound: admits(bound + 1) always fails, and admitting
// d- + 1 forces every minimum in-degree vertex with an out-arc off
// digons. Exhaustive over all digraphs n <= 4 plus seeded random draws.
SuiteReport verify_prop1(std::uint64_t samples = 1000, std::uint64_t seed = 0,
        HarnessOptions options = {});

} // namespace idcode

#endif
