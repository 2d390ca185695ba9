#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <idcode/codes.hpp>
#include <idcode/generators.hpp>
#include <idcode/io.hpp>
#include <idcode/patterns.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace idcode;

namespace {

template <typename F>
Err error_code_of(F && f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    throw std::logic_error("expected an idcode::Error");
}

// every injective arc-preserving map from body into host, by brute force
void brute_maps_rec(const Digraph & host, const Digraph & body, std::vector<int> & map,
        std::vector<char> & used, int level, std::vector<std::vector<int>> & out)
{
    if (level == body.order()) {
        out.push_back(map);
        return;
    }
    for (int hv = 0; hv < host.order(); ++hv) {
        if (used[hv])
            continue;
        bool ok = true;
        for (int b = 0; b < level && ok; ++b) {
            if (body.has_arc(level, b) && ! host.has_arc(hv, map[b]))
                ok = false;
            if (body.has_arc(b, level) && ! host.has_arc(map[b], hv))
                ok = false;
        }
        if (! ok)
            continue;
        map[level] = hv;
        used[hv] = 1;
        brute_maps_rec(host, body, map, used, level + 1, out);
        used[hv] = 0;
    }
}

std::vector<std::vector<int>> brute_maps(const Digraph & host, const Digraph & body)
{
    std::vector<std::vector<int>> out;
    if (body.order() > host.order())
        return out;
    std::vector<int> map(body.order(), -1);
    std::vector<char> used(host.order(), 0);
    brute_maps_rec(host, body, map, used, 0, out);
    return out;
}

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> maps)
{
    std::sort(maps.begin(), maps.end());
    return maps;
}

Digraph apply_perm(const Digraph & d, const std::vector<int> & perm)
{
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : d.arcs())
        arcs.emplace_back(perm[u], perm[v]);
    return Digraph::from_arc_list(d.order(), arcs);
}

bool brute_isomorphic(const Digraph & a, const Digraph & b)
{
    if (a.order() != b.order() || a.arc_count() != b.arc_count())
        return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (apply_perm(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

VertexSet map_through(const VertexSet & s, const std::vector<int> & map, int host_n)
{
    VertexSet r(host_n);
    s.for_each([&](int v) { r.add(map[v]); });
    return r;
}

// the relaxed witness survival probe: after deleting one arc, no pair of
// distinct anchor sets may stay fully pinned (symmetric difference at
// in-degree exactly d) with equal closed in-neighborhoods
bool has_pinned_witness(const Digraph & d, int deg, int ell)
{
    int n = d.order();
    for (unsigned xm = 1; xm < (1u << n); ++xm) {
        if (__builtin_popcount(xm) > ell)
            continue;
        for (unsigned ym = xm + 1; ym < (1u << n); ++ym) {
            if (__builtin_popcount(ym) > ell)
                continue;
            unsigned sym = xm ^ ym;
            bool pinned = true;
            for (int v = 0; v < n && pinned; ++v)
                if (sym >> v & 1)
                    pinned = d.in_degree(v) == deg;
            if (! pinned)
                continue;
            VertexSet x(n), y(n);
            for (int v = 0; v < n; ++v) {
                if (xm >> v & 1)
                    x.add(v);
                if (ym >> v & 1)
                    y.add(v);
            }
            if (closed_in_neighborhood(d, x) == closed_in_neighborhood(d, y))
                return true;
        }
    }
    return false;
}

Digraph drop_arc(const Digraph & d, std::pair<int, int> arc)
{
    std::vector<std::pair<int, int>> arcs;
    for (auto a : d.arcs())
        if (a != arc)
            arcs.push_back(a);
    return Digraph::from_arc_list(d.order(), arcs);
}

void check_member_validity(const ObstructionCatalog & cat)
{
    for (const auto & member : cat.members) {
        REQUIRE(member.anchors.has_value());
        const VertexSet & x = member.anchors->first;
        const VertexSet & y = member.anchors->second;
        REQUIRE(! x.empty());
        REQUIRE(! y.empty());
        REQUIRE(x != y);
        REQUIRE(x.count() <= cat.ell);
        REQUIRE(y.count() <= cat.ell);

        const Digraph & body = member.body;
        VertexSet nx = closed_in_neighborhood(body, x);
        REQUIRE(nx == closed_in_neighborhood(body, y));
        REQUIRE(nx == VertexSet::full(body.order()));    // no vertex floats free

        VertexSet shared = x & y;
        for (int v = 0; v < body.order(); ++v) {
            if ((x ^ y).contains(v))
                REQUIRE(body.in_degree(v) == cat.d);    // pinned: the host can add nothing
            else if (shared.contains(v))
                REQUIRE(body.in_degree(v) <= cat.d);
            else
                REQUIRE(body.in_degree(v) == 0);
        }
    }

    // pairwise incomparable and pairwise non-isomorphic
    for (std::size_t i = 0; i < cat.members.size(); ++i)
        for (std::size_t j = 0; j < cat.members.size(); ++j) {
            if (i == j)
                continue;
            REQUIRE(! contains_pattern(cat.members[i].body, cat.members[j]));
            if (i < j)
                REQUIRE(canonical_form(cat.members[i].body) != canonical_form(cat.members[j].body));
        }
}

std::vector<std::vector<std::uint8_t>> canon_multiset(const ObstructionCatalog & cat)
{
    std::vector<std::vector<std::uint8_t>> forms;
    for (const auto & member : cat.members)
        forms.push_back(canonical_form(member.body));
    std::sort(forms.begin(), forms.end());
    return forms;
}

} // namespace

TEST_CASE("builtin patterns")
{
    const Pattern & tt3 = builtin_pattern("TT3");
    CHECK(tt3.body.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(! girth(tt3.body).is_finite());    // transitive, hence acyclic
    CHECK(is_oriented(tt3.body));

    const Pattern & f2 = builtin_pattern("F2");
    CHECK(f2.body.arcs() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(is_oriented(f2.body));
    CHECK((f2.body.in_neighbors(2) & f2.body.in_neighbors(3)) == VertexSet::of(4, {0, 1}));

    CHECK(builtin_patterns().size() == 2);
    CHECK(error_code_of([] { builtin_pattern("TT4"); }) == Err::UnknownName);
}

TEST_CASE("pattern construction rules")
{
    Digraph digon = Digraph::from_arc_list(2, {{0, 1}, {1, 0}});
    CHECK_NOTHROW(Pattern("ok", digon, VertexSet::of(2, {0}), VertexSet::of(2, {1})));

    CHECK(error_code_of([] { Pattern("e", Digraph::from_arc_list(3, {})); }) == Err::BadSpec);
    CHECK(error_code_of([&] {
        Pattern("p", digon, VertexSet::of(2, {0}), VertexSet::of(2, {0}));
    }) == Err::BadSpec);    // anchors must differ
    CHECK(error_code_of([&] {
        Pattern("p", digon, VertexSet(2), VertexSet::of(2, {1}));
    }) == Err::BadSpec);    // nonempty
    CHECK(error_code_of([&] {
        Pattern("p", digon, VertexSet::of(3, {0}), VertexSet::of(3, {1}));
    }) == Err::BadSpec);    // anchor universe must be the body
    CHECK(error_code_of([] {
        // closed in-neighborhoods {0,2} vs {1}: unequal
        Pattern("p", Digraph::from_arc_list(3, {{2, 0}, {0, 1}}),
                VertexSet::of(3, {0}), VertexSet::of(3, {1}));
    }) == Err::BadSpec);
}

TEST_CASE("matching on landmarks")
{
    const Pattern & tt3 = builtin_pattern("TT3");
    const Pattern & f2 = builtin_pattern("F2");

    // the only embedding of TT3 into itself is the identity
    auto self_maps = match_pattern(tt3.body, tt3, MatchMode::AllOccurrences);
    REQUIRE(self_maps.size() == 1);
    CHECK(self_maps[0] == std::vector<int>{0, 1, 2});

    // the bidirected triangle carries every vertex ordering of TT3
    Digraph k3 = symmetric_lift(named_graph("cycle:3"));
    CHECK(match_pattern(k3, tt3, MatchMode::AllOccurrences).size() == 6);
    auto first = match_pattern(k3, tt3, MatchMode::FirstOnly);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == match_pattern(k3, tt3, MatchMode::AllOccurrences)[0]);

    CHECK(! contains_pattern(directed_cycle(4), f2));
    CHECK(! contains_pattern(directed_cycle(3), tt3));
    CHECK(contains_pattern(symmetric_lift(named_graph("complete_bipartite:2,2")), f2));

    // a pattern larger than the host never matches
    CHECK(! contains_pattern(directed_cycle(3), f2));

    // anchors are metadata: they do not restrict the embeddings
    Digraph digon = Digraph::from_arc_list(2, {{0, 1}, {1, 0}});
    Pattern plain("plain", digon);
    Pattern anchored("anchored", digon, VertexSet::of(2, {0}), VertexSet::of(2, {1}));
    Digraph host = symmetric_lift(named_graph("cycle:4"));
    CHECK(sorted(match_pattern(host, plain, MatchMode::AllOccurrences))
            == sorted(match_pattern(host, anchored, MatchMode::AllOccurrences)));
}

TEST_CASE("matcher agrees with brute-force injective map enumeration")
{
    AllDigraphs family(4);
    for (std::uint64_t i = 0; i < family.count(); ++i) {
        Digraph host = family.at(i);
        for (const Pattern & p : builtin_patterns()) {
            auto want = sorted(brute_maps(host, p.body));
            auto got = sorted(match_pattern(host, p, MatchMode::AllOccurrences));
            REQUIRE(got == want);
            REQUIRE(contains_pattern(host, p) == ! want.empty());
        }
    }

    // spot-check bigger hosts and patterns with digons
    std::mt19937 rng(57);
    Pattern c4("c4", directed_cycle(4));
    Pattern digon("c2", Digraph::from_arc_list(2, {{0, 1}, {1, 0}}));
    for (int trial = 0; trial < 25; ++trial) {
        Digraph host = random_digraph(7, 0.35, rng());
        for (const Pattern * p : {&c4, &digon}) {
            REQUIRE(sorted(match_pattern(host, *p, MatchMode::AllOccurrences))
                    == sorted(brute_maps(host, p->body)));
        }
    }
}

TEST_CASE("canonical forms separate isomorphism classes exactly")
{
    // invariant under relabeling
    Digraph base = Digraph::from_arc_list(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    auto form = canonical_form(base);
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        CHECK(canonical_form(apply_perm(base, perm)) == form);
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(canonical_form(directed_cycle(3)) != canonical_form(builtin_pattern("TT3").body));
    CHECK(canonical_form(Digraph::from_arc_list(2, {{0, 1}, {1, 0}}))
            != canonical_form(Digraph::from_arc_list(2, {{0, 1}})));

    // equal bytes if and only if isomorphic, exhaustively at order 3
    AllDigraphs family(3);
    std::vector<Digraph> all;
    for (std::uint64_t i = 0; i < family.count(); ++i)
        all.push_back(family.at(i));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            REQUIRE((canonical_form(all[i]) == canonical_form(all[j]))
                    == brute_isomorphic(all[i], all[j]));

    // random relabelings at order 6 stay in the same class
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        Digraph d = random_digraph(6, 0.4, rng());
        std::vector<int> p(6);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        REQUIRE(canonical_form(d) == canonical_form(apply_perm(d, p)));
    }

    CHECK_NOTHROW(canonical_form(directed_cycle(10)));
    CHECK(error_code_of([] { canonical_form(directed_cycle(11)); }) == Err::TooLarge);
}

TEST_CASE("obstruction catalogs for one-in-regular hosts")
{
    // ell = 1: the digon alone
    ObstructionCatalog cat11 = enumerate_obstructions(1, 1, 2);
    CHECK(cat11.d == 1);
    CHECK(cat11.ell == 1);
    CHECK(cat11.provenance == Provenance::Derived);
    REQUIRE(cat11.members.size() == 1);
    CHECK(cat11.members[0].name == "m01");
    CHECK(canonical_form(cat11.members[0].body) == canonical_form(directed_cycle(2)));
    check_member_validity(cat11);

    // ell = 2: exactly the directed cycles C2, C3, C4
    ObstructionCatalog cat12 = enumerate_obstructions(1, 2, 4);
    REQUIRE(cat12.members.size() == 3);
    std::vector<std::vector<std::uint8_t>> expected = {
        canonical_form(directed_cycle(2)),
        canonical_form(directed_cycle(3)),
        canonical_form(directed_cycle(4))};
    std::sort(expected.begin(), expected.end());
    CHECK(canon_multiset(cat12) == expected);
    check_member_validity(cat12);

    // a generous size cap changes nothing: completeness holds at (d+1)*ell
    CHECK(canon_multiset(enumerate_obstructions(1, 2, 9)) == expected);
}

TEST_CASE("obstruction catalogs for two-in-regular hosts")
{
    // ell = 1: a digon with one shared extra in-neighbor
    ObstructionCatalog cat21 = enumerate_obstructions(2, 1, 3);
    REQUIRE(cat21.members.size() == 1);
    Digraph expected21 = Digraph::from_arc_list(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}});
    CHECK(canonical_form(cat21.members[0].body) == canonical_form(expected21));
    CHECK(cat21.members[0].anchors->first.count() == 1);
    CHECK(cat21.members[0].anchors->second.count() == 1);
    check_member_validity(cat21);

    // ell = 2: thirteen minimal bodies, pinned by their canonical forms
    ObstructionCatalog cat22 = enumerate_obstructions(2, 2, 6);
    REQUIRE(cat22.members.size() == 13);
    check_member_validity(cat22);

    static const char * pinned[] = {
        "d:3:4:0-1,1-0,2-0,2-1",
        "d:4:5:0-2,1-0,2-1,3-0,3-2",
        "d:4:5:0-2,1-0,2-0,3-1,3-2",
        "d:5:6:0-1,2-1,3-0,3-2,4-0,4-2",
        "d:5:6:0-1,2-0,3-0,3-2,4-1,4-2",
        "d:5:6:0-2,2-0,3-0,3-1,4-1,4-2",
        "d:5:8:0-3,1-0,1-2,1-3,2-0,3-1,4-1,4-2",
        "d:5:8:0-1,0-2,0-3,1-2,2-0,3-0,4-1,4-3",
        "d:5:8:0-3,1-2,2-0,3-1,4-0,4-1,4-2,4-3",
        "d:6:8:0-2,1-2,2-0,3-0,4-1,4-3,5-1,5-3",
        "d:6:8:0-2,1-3,2-0,3-0,4-1,4-2,5-1,5-3",
        "d:6:8:0-2,1-3,2-0,3-1,4-0,4-3,5-1,5-2",
        "d:6:8:0-3,1-2,2-0,3-1,4-0,4-2,5-1,5-3"};
    std::vector<std::vector<std::uint8_t>> want;
    for (const char * compact : pinned)
        want.push_back(canonical_form(from_compact(compact)));
    std::sort(want.begin(), want.end());
    CHECK(canon_multiset(cat22) == want);

    // member names count up in emission order
    for (std::size_t i = 0; i < cat22.members.size(); ++i) {
        std::string idx = std::to_string(i + 1);
        if (idx.size() < 2)
            idx = "0" + idx;
        REQUIRE(cat22.members[i].name == "m" + idx);
    }

    // exactly one member survives the oriented, transitive-triangle-free cut
    int clean = 0;
    const Pattern * survivor = nullptr;
    for (const auto & member : cat22.members)
        if (is_oriented(member.body) && ! contains_pattern(member.body, builtin_pattern("TT3"))) {
            ++clean;
            survivor = &member;
        }
    CHECK(clean == 1);
    REQUIRE(survivor != nullptr);
    CHECK(survivor->body.order() == 5);
    CHECK(survivor->body.arc_count() == 6);
}

TEST_CASE("catalog members are arc-minimal")
{
    for (auto [d, ell, cap] : {std::tuple{1, 2, 4}, std::tuple{2, 1, 3}, std::tuple{2, 2, 6}}) {
        ObstructionCatalog cat = enumerate_obstructions(d, ell, cap);
        for (const auto & member : cat.members) {
            REQUIRE(has_pinned_witness(member.body, d, ell));    // the body itself is a witness
            for (auto arc : member.body.arcs())
                REQUIRE(! has_pinned_witness(drop_arc(member.body, arc), d, ell));
        }
    }
}

TEST_CASE("catalog hits are sound and complete on two-in-regular hosts")
{
    ObstructionCatalog cat = enumerate_obstructions(2, 2, 6);

    auto check_host = [&](const Digraph & host) {
        bool any_hit = false;
        for (const auto & member : cat.members)
            for (const auto & map : match_pattern(host, member, MatchMode::AllOccurrences)) {
                any_hit = true;
                VertexSet hx = map_through(member.anchors->first, map, host.order());
                VertexSet hy = map_through(member.anchors->second, map, host.order());
                REQUIRE(hx != hy);
                REQUIRE(closed_in_neighborhood(host, hx) == closed_in_neighborhood(host, hy));
            }
        REQUIRE(any_hit == ! admits(host, 2).ok);
    };

    DInRegularDigraphs four(4, 2);
    for (std::uint64_t i = 0; i < four.count(); ++i)
        check_host(four.at(i));
    DInRegularDigraphs five(5, 2);
    for (std::uint64_t i = 0; i < five.count(); i += 97)
        check_host(five.at(i));
}

TEST_CASE("the three-set catalog splits along the oriented triangle-free cut")
{
    ObstructionCatalog cat = enumerate_obstructions(2, 3, 9);
    CHECK(cat.members.size() == 18);
    int clean = 0;
    for (const auto & member : cat.members)
        if (is_oriented(member.body) && ! contains_pattern(member.body, builtin_pattern("TT3")))
            ++clean;
    CHECK(clean == 15);
    check_member_validity(cat);
}

TEST_CASE("enumeration parameter validation")
{
    CHECK(error_code_of([] { enumerate_obstructions(0, 1, 3); }) == Err::BadSpec);
    CHECK(error_code_of([] { enumerate_obstructions(1, 0, 3); }) == Err::BadSpec);
    CHECK(error_code_of([] { enumerate_obstructions(2, 2, 5); }) == Err::SizeCapTooSmall);
    CHECK(error_code_of([] { enumerate_obstructions(3, 3, 12); }) == Err::TooLarge);
}

TEST_CASE("matching against a whole catalog")
{
    ObstructionCatalog cat = enumerate_obstructions(2, 2, 6);

    // each member body hits itself and, being minimal, nothing earlier
    for (std::size_t i = 0; i < cat.members.size(); ++i) {
        auto hit = match_catalog(cat.members[i].body, cat);
        REQUIRE(hit.has_value());
        CHECK(hit->first == i);
    }

    CHECK(! match_catalog(directed_cycle(5), cat).has_value());
}

TEST_CASE("catalog files round trip byte for byte")
{
    ObstructionCatalog cat = enumerate_obstructions(2, 2, 6);

    std::ostringstream first;
    write_catalog(first, cat);
    std::ostringstream second;
    write_catalog(second, cat);
    CHECK(first.str() == second.str());
    CHECK(first.str().rfind("catalog d=2 ell=2 provenance=derived\n", 0) == 0);

    std::istringstream in(first.str());
    ObstructionCatalog back = read_catalog(in);
    CHECK(back.d == cat.d);
    CHECK(back.ell == cat.ell);
    CHECK(back.provenance == cat.provenance);
    REQUIRE(back.members.size() == cat.members.size());
    for (std::size_t i = 0; i < cat.members.size(); ++i) {
        CHECK(back.members[i].name == cat.members[i].name);
        CHECK(back.members[i].body == cat.members[i].body);
        REQUIRE(back.members[i].anchors.has_value());
        CHECK(back.members[i].anchors->first == cat.members[i].anchors->first);
        CHECK(back.members[i].anchors->second == cat.members[i].anchors->second);
    }

    std::ostringstream again;
    write_catalog(again, back);
    CHECK(again.str() == first.str());

    // user-supplied catalogs, possibly without anchors, survive too
    ObstructionCatalog user;
    user.d = 1;
    user.ell = 1;
    user.provenance = Provenance::UserSupplied;
    user.members.emplace_back("TT3", builtin_pattern("TT3").body);
    std::ostringstream uout;
    write_catalog(uout, user);
    std::istringstream uin(uout.str());
    ObstructionCatalog uback = read_catalog(uin);
    CHECK(uback.provenance == Provenance::UserSupplied);
    REQUIRE(uback.members.size() == 1);
    CHECK(! uback.members[0].anchors.has_value());
    CHECK(uback.members[0].body == builtin_pattern("TT3").body);
}

TEST_CASE("catalog parse failures")
{
    auto parse = [](const std::string & text) {
        std::istringstream in(text);
        return read_catalog(in);
    };

    CHECK(error_code_of([&] { parse(""); }) == Err::ParseError);
    CHECK(error_code_of([&] { parse("catalog d=2 ell=2\n"); }) == Err::ParseError);
    CHECK(error_code_of([&] { parse("catalog d=2 ell=2 provenance=wild\n"); }) == Err::ParseError);
    CHECK(error_code_of([&] { parse("catalog d=x ell=2 provenance=derived\n"); }) == Err::ParseError);

    std::string head = "catalog d=1 ell=1 provenance=derived\n\n";
    CHECK(error_code_of([&] { parse(head + "d 2 2\n0 1\n1 0\n"); }) == Err::ParseError);
    CHECK(error_code_of([&] { parse(head + "pattern p\nd 2 2\n0 1\n"); }) == Err::ParseError);
    CHECK(error_code_of([&] { parse(head + "pattern p\nd 2 9\n"); }) == Err::ParseError);
    CHECK(error_code_of([&] {
        parse(head + "pattern p\nd 2 2\n0 1\n1 0\nanchorX 0\n");
    }) == Err::ParseError);    // anchorX alone
    CHECK(error_code_of([&] {
        parse(head + "pattern p\nd 2 2\n0 1\n1 0\nanchorX 0\nanchorY 5\n");
    }) == Err::OutOfRange);    // anchor vertex outside the body
    CHECK(error_code_of([&] {
        parse(head + "pattern p\nd 2 2\n0 1\n1 0\nanchorX 0\nanchorY 0\n");
    }) == Err::BadSpec);    // anchors must differ
}
