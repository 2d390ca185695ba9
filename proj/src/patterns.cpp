#include <idcode/patterns.hpp>
#include <idcode/codes.hpp>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace idcode {

namespace {
    void check_anchor_pair(const Digraph & body, const VertexSet & x, const VertexSet & y)
    {
        if (x.ambient_size() != body.order() || y.ambient_size() != body.order())
            throw Error(Err::BadSpec, "anchor sets must live on the body's vertices");
        if (x.empty() || y.empty())
            throw Error(Err::BadSpec, "anchor sets must be nonempty");
        if (x == y)
            throw Error(Err::BadSpec, "anchor sets must differ");
        if (closed_in_neighborhood(body, x) != closed_in_neighborhood(body, y))
            throw Error(Err::BadSpec, "anchor sets must have equal closed in-neighborhoods");
    }
}

Pattern::Pattern(std::string name_, Digraph body_) :
    name(std::move(name_)), body(std::move(body_))
{
    if (body.arc_count() < 1)
        throw Error(Err::BadSpec, "pattern body needs at least one arc");
}

Pattern::Pattern(std::string name_, Digraph body_, VertexSet x, VertexSet y) :
    name(std::move(name_)), body(std::move(body_))
{
    if (body.arc_count() < 1)
        throw Error(Err::BadSpec, "pattern body needs at least one arc");
    check_anchor_pair(body, x, y);
    anchors = std::make_pair(std::move(x), std::move(y));
}

const std::vector<Pattern> & builtin_patterns()
{
    static const std::vector<Pattern> patterns = [] {
        std::vector<Pattern> v;
        v.emplace_back("TT3", Digraph::from_arc_list(3, {{0, 1}, {0, 2}, {1, 2}}));
        v.emplace_back("F2", Digraph::from_arc_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
        return v;
    }();
    return patterns;
}

const Pattern & builtin_pattern(const std::string & name)
{
    for (const auto & p : builtin_patterns())
        if (p.name == name)
            return p;
    throw Error(Err::UnknownName, "no builtin pattern '" + name + "'");
}

std::vector<std::vector<int>> match_pattern(const Digraph & host, const Pattern & pat, MatchMode mode)
{
    const Digraph & p = pat.body;
    const int np = p.order(), nh = host.order();
    std::vector<std::vector<int>> out;
    if (np > nh)
        return out;

    // assign high-degree pattern vertices first
    std::vector<int> order(np);
    for (int i = 0; i < np; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        int du = p.in_degree(u) + p.out_degree(u), dv = p.in_degree(v) + p.out_degree(v);
        if (du != dv)
            return du > dv;
        return u < v;
    });

    std::vector<int> assigned(np, -1);
    VertexSet used(nh);
    bool stop = false;

    auto dfs = [&](auto && self, int level) -> void {
        if (stop)
            return;
        if (level == np) {
            out.push_back(assigned);
            if (mode == MatchMode::FirstOnly)
                stop = true;
            return;
        }
        int u = order[level];
        for (int hv = 0; hv < nh && ! stop; ++hv) {
            if (used.contains(hv))
                continue;
            if (host.in_degree(hv) < p.in_degree(u) || host.out_degree(hv) < p.out_degree(u))
                continue;
            bool ok = true;
            for (int earlier = 0; earlier < level && ok; ++earlier) {
                int w = order[earlier];
                if (p.has_arc(u, w) && ! host.has_arc(hv, assigned[w]))
                    ok = false;
                else if (p.has_arc(w, u) && ! host.has_arc(assigned[w], hv))
                    ok = false;
            }
            if (! ok)
                continue;
            assigned[u] = hv;
            used.add(hv);
            self(self, level + 1);
            used.remove(hv);
            assigned[u] = -1;
        }
    };
    dfs(dfs, 0);
    return out;
}

bool contains_pattern(const Digraph & host, const Pattern & p)
{
    return ! match_pattern(host, p, MatchMode::FirstOnly).empty();
}

std::vector<std::uint8_t> canonical_form(const Digraph & d)
{
    const int n = d.order();
    if (n > 10)
        throw Error(Err::TooLarge, "canonical form limited to 10 vertices");

    // vertices grouped by (in-degree, out-degree); position i of any
    // candidate permutation must take a vertex of the class at sorted
    // position i, which is isomorphism-invariant
    std::vector<std::pair<int, int>> cls(n);
    for (int v = 0; v < n; ++v)
        cls[v] = {d.in_degree(v), d.out_degree(v)};
    std::vector<std::pair<int, int>> cls_at = cls;
    std::sort(cls_at.begin(), cls_at.end());

    // scan encoding: for each level i, cells arc(i->0..i-1) then
    // arc(0..i-1 -> i); level i occupies [i*(i-1), i*(i-1) + 2i)
    const int cells = n * (n - 1);
    std::vector<std::uint8_t> best(cells, 0xFF), cur(cells, 0);
    std::vector<int> perm(n, -1);
    std::vector<char> taken(n, 0);

    auto dfs = [&](auto && self, int i) -> void {
        if (i == n)
            return;   // best already equals cur along the all-equal path
        const int off = i * (i - 1);
        const int len = 2 * i;
        for (int v = 0; v < n; ++v) {
            if (taken[v] || cls[v] != cls_at[i])
                continue;
            for (int j = 0; j < i; ++j) {
                cur[off + j] = d.has_arc(v, perm[j]) ? 1 : 0;
                cur[off + i + j] = d.has_arc(perm[j], v) ? 1 : 0;
            }
            int cmp = len == 0 ? 0 : std::memcmp(cur.data() + off, best.data() + off, len);
            if (cmp > 0)
                continue;
            if (cmp < 0) {
                // everything below this prefix beats the old best; adopt
                // the prefix and reopen the suffix
                std::memcpy(best.data(), cur.data(), off + len);
                std::fill(best.begin() + off + len, best.end(), 0xFF);
            }
            perm[i] = v;
            taken[v] = 1;
            self(self, i + 1);
            taken[v] = 0;
            perm[i] = -1;
        }
    };
    dfs(dfs, 0);

    // header byte n, then the winning cells packed MSB-first
    std::vector<std::uint8_t> packed(1 + (cells + 7) / 8, 0);
    packed[0] = static_cast<std::uint8_t>(n);
    for (int c = 0; c < cells; ++c)
        if (best[c])
            packed[1 + c / 8] |= std::uint8_t(0x80) >> (c % 8);
    return packed;
}

// ---------------------------------------------------------------------
// obstruction enumeration

namespace {
    // all k-subsets of items, lexicographic, as index vectors into items
    template <typename F>
    void for_each_combination(int item_count, int k, F && f)
    {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i)
            pick[i] = i;
        if (k > item_count)
            return;
        for (;;) {
            f(pick);
            int i = k - 1;
            while (i >= 0 && pick[i] == item_count - k + i)
                --i;
            if (i < 0)
                return;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    struct ObsSearch {
        int d, ell, cap;
        // canonical bytes -> (body, anchors); map keeps a deterministic order
        std::map<std::vector<std::uint8_t>, std::pair<Digraph, std::pair<VertexSet, VertexSet>>> found;

        // current skeleton: |X| = a, |Y| = b, |X n Y| = o, anchored labels
        // X = {0..a-1}, Y = {a-o..s-1} with s = a+b-o; extras from s up
        int a = 0, b = 0, o = 0, s = 0;
        std::vector<VertexSet> nbhd;   // in-neighborhood per anchored label
        int total = 0;                 // labels in use

        explicit ObsSearch(int d_, int ell_, int cap_) : d(d_), ell(ell_), cap(cap_), nbhd(cap_, VertexSet(cap_)) {}

        void run()
        {
            for (a = 1; a <= ell; ++a)
                for (b = a; b <= ell; ++b)
                    for (o = 0; o <= a; ++o) {
                        if (o == a && a == b)
                            continue;   // X == Y
                        if (b - o > d * a)
                            continue;   // Y\X cannot fit inside N-(X)
                        s = a + b - o;
                        if (s > cap)
                            continue;
                        total = s;
                        assign_x(0);
                    }
        }

        void assign_x(int xi)
        {
            if (xi == a) {
                finish_x();
                return;
            }
            int x = xi;
            // a vertex of X \ Y needs its full d in-arcs in the body: a
            // d-in-regular host can then add none, so N-(x) is pinned.  a
            // shared vertex of X n Y tolerates host additions (they land in
            // N-[X] and N-[Y] alike), so any 0..d of its in-arcs may stay.
            int low = xi < a - o ? d : 0;
            // old labels available to x
            std::vector<int> old_labels;
            old_labels.reserve(total - 1);
            for (int l = 0; l < total; ++l)
                if (l != x)
                    old_labels.push_back(l);
            for (int size = low; size <= d; ++size) {
                // fresh labels enter in first-use order, so a choice is: how
                // many fresh, plus which old
                for (int fresh = 0; fresh <= size && total + fresh <= cap; ++fresh) {
                    if (size - fresh > (int)old_labels.size())
                        continue;
                    for_each_combination((int)old_labels.size(), size - fresh, [&](const std::vector<int> & pick) {
                        VertexSet chosen(cap);
                        for (int pi : pick)
                            chosen.add(old_labels[pi]);
                        for (int f = 0; f < fresh; ++f)
                            chosen.add(total + f);
                        nbhd[x] = chosen;
                        int saved_total = total;
                        total += fresh;
                        assign_x(xi + 1);
                        total = saved_total;
                    });
                }
            }
        }

        void finish_x()
        {
            // V = X u N-(X); every label must land in it, in particular Y\X
            VertexSet v_all(cap);
            for (int x = 0; x < a; ++x) {
                v_all.add(x);
                v_all |= nbhd[x];
            }
            // X and the extras are inside V by construction, so a miss can
            // only be a label of Y\X
            if (v_all.count() != total)
                return;

            // covered so far: Y itself plus the in-neighborhoods of X n Y
            VertexSet covered(cap);
            for (int y = a - o; y < s; ++y)
                covered.add(y);
            for (int y = a - o; y < a; ++y)
                covered |= nbhd[y];
            assign_y(a, v_all, covered);
        }

        void assign_y(int y, const VertexSet & v_all, const VertexSet & covered)
        {
            int left = s - y;
            if ((v_all.minus(covered)).count() > d * left)
                return;   // cannot reach N-[Y] = V any more
            if (y == s) {
                emit();
                return;
            }
            std::vector<int> pool;
            pool.reserve(total - 1);
            v_all.for_each([&](int l) {
                if (l != y)
                    pool.push_back(l);
            });
            for_each_combination((int)pool.size(), d, [&](const std::vector<int> & pick) {
                VertexSet chosen(cap);
                for (int pi : pick)
                    chosen.add(pool[pi]);
                nbhd[y] = chosen;
                assign_y(y + 1, v_all, covered | chosen);
            });
        }

        void emit()
        {
            DigraphBuilder builder(total);
            for (int v = 0; v < s; ++v)
                nbhd[v].for_each([&](int w) { builder.add_arc(w, v); });
            Digraph body = builder.build();
            VertexSet x_set(total), y_set(total);
            for (int x = 0; x < a; ++x)
                x_set.add(x);
            for (int y = a - o; y < s; ++y)
                y_set.add(y);
            auto canon = canonical_form(body);
            found.try_emplace(std::move(canon), std::move(body), std::make_pair(std::move(x_set), std::move(y_set)));
        }
    };
}

ObstructionCatalog enumerate_obstructions(int d, int ell, int max_size)
{
    if (d < 1 || ell < 1)
        throw Error(Err::BadSpec, "need d >= 1 and ell >= 1");
    int need = (d + 1) * ell;
    if (max_size < need)
        throw Error(Err::SizeCapTooSmall, "completeness needs max_size >= " + std::to_string(need));
    if (need > 10)
        throw Error(Err::TooLarge, "(d+1)*ell beyond the canonical form limit of 10");

    ObsSearch search(d, ell, need);
    search.run();

    struct Cand {
        Digraph body;
        std::pair<VertexSet, VertexSet> anchors;
        std::vector<std::uint8_t> canon;
    };
    std::vector<Cand> cands;
    cands.reserve(search.found.size());
    for (auto & [canon, bp] : search.found)
        cands.push_back({std::move(bp.first), std::move(bp.second), canon});
    std::sort(cands.begin(), cands.end(), [](const Cand & p, const Cand & q) {
        if (p.body.order() != q.body.order())
            return p.body.order() < q.body.order();
        if (p.body.arc_count() != q.body.arc_count())
            return p.body.arc_count() < q.body.arc_count();
        return p.canon < q.canon;
    });

    // smallest first, so anything containing an already-kept member is
    // non-minimal and goes
    ObstructionCatalog cat;
    cat.d = d;
    cat.ell = ell;
    cat.provenance = Provenance::Derived;
    for (auto & cand : cands) {
        bool redundant = false;
        for (const auto & member : cat.members)
            if (contains_pattern(cand.body, member)) {
                redundant = true;
                break;
            }
        if (! redundant) {
            std::string idx = std::to_string(cat.members.size() + 1);
            if (idx.size() < 2)
                idx = "0" + idx;
            cat.members.emplace_back("m" + idx, std::move(cand.body),
                    std::move(cand.anchors.first), std::move(cand.anchors.second));
        }
    }
    return cat;
}

std::optional<std::pair<std::size_t, std::vector<int>>> match_catalog(const Digraph & host, const ObstructionCatalog & cat)
{
    for (std::size_t i = 0; i < cat.members.size(); ++i) {
        auto hits = match_pattern(host, cat.members[i], MatchMode::FirstOnly);
        if (! hits.empty())
            return std::make_pair(i, std::move(hits.front()));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// catalog files

namespace {
    struct CatalogParser {
        std::istream & in;
        int line_no = 0;
        std::optional<std::string> pushed_back = std::nullopt;

        std::optional<std::string> next_content_line()
        {
            if (pushed_back) {
                auto l = std::move(*pushed_back);
                pushed_back.reset();
                return l;
            }
            std::string line;
            while (std::getline(in, line)) {
                ++line_no;
                auto first = line.find_first_not_of(" \t\r");
                if (first == std::string::npos || line[first] == '#')
                    continue;
                return line;
            }
            return std::nullopt;
        }

        void push_back(std::string line) { pushed_back = std::move(line); }

        [[noreturn]] void fail(const std::string & what) const
        {
            throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": " + what);
        }
    };

    std::vector<int> parse_vertex_list(CatalogParser & p, std::istringstream & ss)
    {
        std::vector<int> vs;
        long long v;
        while (ss >> v) {
            if (v < 0 || v > VertexSet::max_vertices)
                p.fail("vertex out of range");
            vs.push_back(static_cast<int>(v));
        }
        if (! ss.eof())
            p.fail("malformed vertex list");
        return vs;
    }
}

ObstructionCatalog read_catalog(std::istream & in)
{
    CatalogParser p{in};
    auto header = p.next_content_line();
    if (! header)
        p.fail("expected catalog header");
    ObstructionCatalog cat;
    {
        std::istringstream ss(*header);
        std::string tag, dtok, elltok, provtok;
        if (! (ss >> tag >> dtok >> elltok >> provtok) || tag != "catalog"
                || dtok.rfind("d=", 0) != 0 || elltok.rfind("ell=", 0) != 0
                || provtok.rfind("provenance=", 0) != 0)
            p.fail("malformed catalog header '" + *header + "'");
        try {
            cat.d = std::stoi(dtok.substr(2));
            cat.ell = std::stoi(elltok.substr(4));
        }
        catch (const std::exception &) {
            p.fail("malformed catalog header '" + *header + "'");
        }
        std::string prov = provtok.substr(11);
        if (prov == "derived")
            cat.provenance = Provenance::Derived;
        else if (prov == "user")
            cat.provenance = Provenance::UserSupplied;
        else
            p.fail("unknown provenance '" + prov + "'");
    }

    for (;;) {
        auto line = p.next_content_line();
        if (! line)
            break;
        std::istringstream ss(*line);
        std::string tag, name;
        if (! (ss >> tag >> name) || tag != "pattern")
            p.fail("expected 'pattern <name>', got '" + *line + "'");

        auto dline = p.next_content_line();
        if (! dline)
            p.fail("expected digraph header");
        std::istringstream ds(*dline);
        std::string dtag;
        long long n, m;
        if (! (ds >> dtag >> n >> m) || dtag != "d")
            p.fail("malformed digraph header '" + *dline + "'");
        if (n < 1 || n > VertexSet::max_vertices || m < 0 || m > n * (n - 1))
            p.fail("implausible digraph header '" + *dline + "'");
        std::vector<std::pair<int, int>> arcs;
        for (long long i = 0; i < m; ++i) {
            auto aline = p.next_content_line();
            if (! aline)
                p.fail("unexpected end of arc list");
            std::istringstream as(*aline);
            long long u, v;
            std::string rest;
            if (! (as >> u >> v) || (as >> rest))
                p.fail("malformed arc '" + *aline + "'");
            arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        Digraph body = Digraph::from_arc_list(static_cast<int>(n), arcs);

        std::optional<std::vector<int>> ax, ay;
        for (int side = 0; side < 2; ++side) {
            auto aline = p.next_content_line();
            if (! aline)
                break;
            std::istringstream as(*aline);
            std::string atag;
            as >> atag;
            if (atag == "anchorX" && ! ax && ! ay)
                ax = parse_vertex_list(p, as);
            else if (atag == "anchorY" && ax && ! ay)
                ay = parse_vertex_list(p, as);
            else {
                p.push_back(*aline);
                break;
            }
        }
        if (ax.has_value() != ay.has_value())
            p.fail("anchorX and anchorY must appear together");

        if (ax)
            cat.members.emplace_back(name, std::move(body),
                    VertexSet::of(static_cast<int>(n), *ax), VertexSet::of(static_cast<int>(n), *ay));
        else
            cat.members.emplace_back(name, std::move(body));
    }
    return cat;
}

ObstructionCatalog load_catalog(const std::string & path)
{
    if (path == "-")
        return read_catalog(std::cin);
    std::ifstream f(path);
    if (! f)
        throw Error(Err::IoError, "cannot open '" + path + "' for reading");
    return read_catalog(f);
}

void write_catalog(std::ostream & out, const ObstructionCatalog & cat)
{
    out << "catalog d=" << cat.d << " ell=" << cat.ell << " provenance="
        << (cat.provenance == Provenance::Derived ? "derived" : "user") << '\n';
    for (const auto & member : cat.members) {
        out << '\n' << "pattern " << member.name << '\n';
        out << "d " << member.body.order() << ' ' << member.body.arc_count() << '\n';
        for (auto [u, v] : member.body.arcs())
            out << u << ' ' << v << '\n';
        if (member.anchors) {
            out << "anchorX";
            member.anchors->first.for_each([&](int v) { out << ' ' << v; });
            out << '\n' << "anchorY";
            member.anchors->second.for_each([&](int v) { out << ' ' << v; });
            out << '\n';
        }
    }
}

void save_catalog(const std::string & path, const ObstructionCatalog & cat)
{
    if (path == "-") {
        write_catalog(std::cout, cat);
        return;
    }
    std::ofstream f(path);
    if (! f)
        throw Error(Err::IoError, "cannot open '" + path + "' for writing");
    write_catalog(f, cat);
}

} // namespace idcode
