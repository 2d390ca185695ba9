#ifndef IDCODE_PATTERNS_HPP
#define IDCODE_PATTERNS_HPP

#include <idcode/digraph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idcode {

// A forbidden subdigraph. Anchors, when present, are a witness pair:
// distinct nonempty vertex sets of the body with equal closed
// in-neighborhoods there.
struct Pattern {
    std::string name;
    Digraph body;
    std::optional<std::pair<VertexSet, VertexSet>> anchors;

    Pattern(std::string name, Digraph body);
    Pattern(std::string name, Digraph body, VertexSet x, VertexSet y);
};

// TT3: the transitive triangle, arcs (0,1) (0,2) (1,2).
// F2: two vertices with two common in-neighbors, arcs (0,2) (0,3) (1,2) (1,3).
const std::vector<Pattern> & builtin_patterns();
const Pattern & builtin_pattern(const std::string & name);

enum class MatchMode { FirstOnly, AllOccurrences };

// Injective arc-preserving maps from the pattern body into the host
// (non-induced: extra host arcs are fine). Each hit is returned as
// map[pattern vertex] = host vertex; deterministic order.
std::vector<std::vector<int>> match_pattern(const Digraph & host, const Pattern & p,
        MatchMode mode = MatchMode::FirstOnly);

bool contains_pattern(const Digraph & host, const Pattern & p);

// Byte string equal for two digraphs iff they are isomorphic. Minimum
// scan-order adjacency encoding over the degree-class-respecting vertex
// permutations. TooLarge beyond 10 vertices.
std::vector<std::uint8_t> canonical_form(const Digraph & d);

enum class Provenance { Derived, UserSupplied };

struct ObstructionCatalog {
    int d = 0;
    int ell = 0;
    Provenance provenance = Provenance::Derived;
    std::vector<Pattern> members;
};

// The complete set of minimal anchored obstructions for d-in-regular
// hosts at a given ell: bodies where every vertex of the symmetric
// difference X ^ Y has in-degree exactly d (the host can then add
// nothing), vertices shared by X and Y keep any 0..d of their in-arcs
// (host additions land in N-[X] and N-[Y] alike and cancel), every other
// vertex has in-degree 0, and both closed in-neighborhoods cover the
// whole body. Any such pattern occurring in a d-in-regular digraph
// defeats (1,<=ell), and conversely every failure contains one on at
// most (d+1)*ell vertices, so max_size below that bound is refused
// (SizeCapTooSmall). One representative per isomorphism class, minimal
// under containment, sorted by (order, arcs, canonical bytes) and named
// m01, m02, ...
ObstructionCatalog enumerate_obstructions(int d, int ell, int max_size);

// first matching member, as (member index, map), if any
std::optional<std::pair<std::size_t, std::vector<int>>> match_catalog(const Digraph & host,
        const ObstructionCatalog & cat);

// Catalog file format:
//
//   catalog d=<d> ell=<ell> provenance=<derived|user>
//
//   pattern <name>
//   d <n> <m>
//   <u> <v>           (m lines)
//   anchorX <v> ...   (optional, together with anchorY)
//   anchorY <v> ...
//
// Records separated by blank lines; writer output is byte-stable.
ObstructionCatalog read_catalog(std::istream & in);
ObstructionCatalog load_catalog(const std::string & path);
void write_catalog(std::ostream & out, const ObstructionCatalog & cat);
void save_catalog(const std::string & path, const ObstructionCatalog & cat);

} // namespace idcode

#endif
