#include <idcode/io.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace idcode {

namespace {
    // line-oriented tokenizer that skips blanks and # comments and keeps a
    // line number for errors
    struct LineReader {
        std::istream & in;
        int line_no = 0;

        std::optional<std::string> next_content_line()
        {
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

        [[noreturn]] void fail(const std::string & what) const
        {
            throw Error(Err::ParseError, "line " + std::to_string(line_no) + ": " + what);
        }
    };

    std::pair<int, int> parse_header(LineReader & r, char kind)
    {
        auto line = r.next_content_line();
        if (! line)
            r.fail("expected header");
        std::istringstream ss(*line);
        std::string tag;
        long long n, m;
        if (! (ss >> tag >> n >> m) || tag.size() != 1)
            r.fail("malformed header '" + *line + "'");
        std::string rest;
        if (ss >> rest)
            r.fail("trailing token '" + rest + "' after header");
        if (tag[0] != kind)
            r.fail(std::string("expected '") + kind + "' header, got '" + tag + "'");
        if (n < 1 || n > VertexSet::max_vertices)
            throw Error(Err::BadSize, "order " + std::to_string(n) + " not in [1, " + std::to_string(VertexSet::max_vertices) + "]");
        if (m < 0 || m > (long long)n * (n - 1))
            r.fail("implausible arc count " + std::to_string(m));
        return {static_cast<int>(n), static_cast<int>(m)};
    }

    std::pair<int, int> parse_pair_line(LineReader & r)
    {
        auto line = r.next_content_line();
        if (! line)
            r.fail("unexpected end of input");
        std::istringstream ss(*line);
        long long u, v;
        if (! (ss >> u >> v))
            r.fail("malformed pair '" + *line + "'");
        std::string rest;
        if (ss >> rest)
            r.fail("trailing token '" + rest + "'");
        if (u < 0 || u > VertexSet::max_vertices || v < 0 || v > VertexSet::max_vertices)
            throw Error(Err::OutOfRange, "line " + std::to_string(r.line_no) + ": vertex out of range");
        return {static_cast<int>(u), static_cast<int>(v)};
    }
}

Digraph read_digraph(std::istream & in)
{
    LineReader r{in};
    auto [n, m] = parse_header(r, 'd');
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m);
    for (int i = 0; i < m; ++i)
        arcs.push_back(parse_pair_line(r));
    return Digraph::from_arc_list(n, arcs);
}

UndirectedGraph read_graph(std::istream & in)
{
    LineReader r{in};
    auto [n, m] = parse_header(r, 'g');
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i)
        edges.push_back(parse_pair_line(r));
    return UndirectedGraph::from_edge_list(n, edges);
}

void write_digraph(std::ostream & out, const Digraph & d)
{
    out << "d " << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
}

void write_graph(std::ostream & out, const UndirectedGraph & g)
{
    out << "g " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

namespace {
    std::ifstream open_input(const std::string & path)
    {
        std::ifstream f(path);
        if (! f)
            throw Error(Err::IoError, "cannot open '" + path + "' for reading");
        return f;
    }
}

Digraph load_digraph(const std::string & path)
{
    if (path == "-")
        return read_digraph(std::cin);
    auto f = open_input(path);
    return read_digraph(f);
}

UndirectedGraph load_graph(const std::string & path)
{
    if (path == "-")
        return read_graph(std::cin);
    auto f = open_input(path);
    return read_graph(f);
}

void save_digraph(const std::string & path, const Digraph & d)
{
    if (path == "-") {
        write_digraph(std::cout, d);
        return;
    }
    std::ofstream f(path);
    if (! f)
        throw Error(Err::IoError, "cannot open '" + path + "' for writing");
    write_digraph(f, d);
}

std::string to_compact(const Digraph & d)
{
    std::string s = "d:" + std::to_string(d.order()) + ':' + std::to_string(d.arc_count()) + ':';
    bool sep = false;
    for (auto [u, v] : d.arcs()) {
        if (sep)
            s += ',';
        s += std::to_string(u);
        s += '-';
        s += std::to_string(v);
        sep = true;
    }
    return s;
}

Digraph from_compact(const std::string & s)
{
    auto fail = [&]() { throw Error(Err::ParseError, "bad compact digraph '" + s + "'"); };
    if (s.rfind("d:", 0) != 0)
        fail();
    std::size_t p1 = s.find(':', 2);
    std::size_t p2 = p1 == std::string::npos ? std::string::npos : s.find(':', p1 + 1);
    if (p2 == std::string::npos)
        fail();
    int n = 0, m = 0;
    try {
        n = std::stoi(s.substr(2, p1 - 2));
        m = std::stoi(s.substr(p1 + 1, p2 - p1 - 1));
    }
    catch (const std::exception &) {
        fail();
    }
    std::vector<std::pair<int, int>> arcs;
    std::string body = s.substr(p2 + 1);
    std::istringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t dash = tok.find('-');
        if (dash == std::string::npos)
            fail();
        try {
            arcs.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        catch (const std::exception &) {
            fail();
        }
    }
    if ((int)arcs.size() != m)
        fail();
    return Digraph::from_arc_list(n, arcs);
}

} // namespace idcode
