#ifndef IDCODE_IO_HPP
#define IDCODE_IO_HPP

#include <idcode/digraph.hpp>

#include <iosfwd>
#include <string>

namespace idcode {

// Text format, one (di)graph per stream:
//
//   # optional comments and blank lines
//   d <n> <m>          (or "g <n> <m>" for an undirected graph)
//   <u> <v>            (m arc or edge lines)
//
// Writers emit arcs (edges) in lexicographic order, no comments.

Digraph read_digraph(std::istream & in);
UndirectedGraph read_graph(std::istream & in);

void write_digraph(std::ostream & out, const Digraph & d);
void write_graph(std::ostream & out, const UndirectedGraph & g);

// path "-" means stdin
Digraph load_digraph(const std::string & path);
UndirectedGraph load_graph(const std::string & path);

void save_digraph(const std::string & path, const Digraph & d);

// One-token form "d:<n>:<m>:<u>-<v>,<u>-<v>,..." used in counterexample
// lines, so a failing instance can be replayed without the generator.
std::string to_compact(const Digraph & d);
Digraph from_compact(const std::string & s);

} // namespace idcode

#endif
