// Graph data model: directed and undirected multigraphs on n labeled
// vertices (1-based) with an ordered, numbered edge list. Loops and parallel
// edges are allowed, and the position of an edge in the list is its number.
//
// Canonical text forms: directed "n=3;1>2,2>3", undirected "n=3;1-2,2-3",
// loops "1>1" / "1-1". Undirected pairs are stored min-endpoint-first, so
// equality of graphs is equality of encodings.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphpoly {

using EdgeMask = std::uint64_t;  // bit i-1 set = edge number i selected

struct DirectedEdge {
    int tail = 1, head = 1;
    bool operator==(const DirectedEdge&) const = default;
    bool is_loop() const { return tail == head; }
};

struct UndirectedEdge {
    int lo = 1, hi = 1;  // lo <= hi always
    bool operator==(const UndirectedEdge&) const = default;
    bool is_loop() const { return lo == hi; }
};

struct DirectedGraph {
    int n = 1;
    std::vector<DirectedEdge> edges;
    int k() const { return static_cast<int>(edges.size()); }
    bool operator==(const DirectedGraph&) const = default;
};

struct UndirectedGraph {
    int n = 1;
    std::vector<UndirectedEdge> edges;
    int k() const { return static_cast<int>(edges.size()); }
    bool operator==(const UndirectedGraph&) const = default;
};

// Validating factories; endpoints must lie in 1..n. The undirected factory
// canonicalizes each pair to (min, max).
DirectedGraph make_directed(int n, const std::vector<std::pair<int, int>>& edges);
UndirectedGraph make_undirected(int n, const std::vector<std::pair<int, int>>& edges);

// Drops orientation edge by edge, preserving numbering.
UndirectedGraph forget(const DirectedGraph& g);

// All-edges-reversed copy.
DirectedGraph reverse(const DirectedGraph& g);

// Replaces edge number i (1-based) by [tail, head].
DirectedGraph replace_edge(const DirectedGraph& g, int i, int tail, int head);

int loop_count(const DirectedGraph& g);
int loop_count(const UndirectedGraph& g);
inline bool has_loops(const DirectedGraph& g) { return loop_count(g) > 0; }
inline bool has_loops(const UndirectedGraph& g) { return loop_count(g) > 0; }

// The graph with all loops deleted (non-loop edges keep their relative
// order) together with the number of deleted loops.
std::pair<DirectedGraph, int> strip_loops(const DirectedGraph& g);
std::pair<UndirectedGraph, int> strip_loops(const UndirectedGraph& g);

// The subgraph selected by `mask`, edges kept in original order (so the
// renumbering is by position). All n vertices are retained.
DirectedGraph subgraph(const DirectedGraph& g, EdgeMask mask);
UndirectedGraph subgraph(const UndirectedGraph& g, EdgeMask mask);

// For a loopless directed g: the unique k-edge graph whose loop-stripped
// form is subgraph(g, mask) — every deselected edge [a,b] becomes the loop
// [a,a] in place. Rejects graphs that already have loops.
DirectedGraph loop_completion(const DirectedGraph& g, EdgeMask mask);

// Undirected version: every deselected edge {a,b} becomes {a,a} or {b,b},
// giving all 2^(k - |mask|) completions. Enumeration order: choice bits over
// deselected edges in edge order, 0 = lower endpoint.
std::vector<UndirectedGraph> loop_completions(const UndirectedGraph& g, EdgeMask mask);

// Orientation of an undirected graph: non-loop edge j gets direction
// lo->hi when the j-th choice bit (counting non-loop edges in edge order)
// is clear, hi->lo when set. orient(g, 0) is the canonical lift.
DirectedGraph orient(const UndirectedGraph& g, EdgeMask choice);
int nonloop_count(const UndirectedGraph& g);

// No directed cycle; any loop disqualifies.
bool is_acyclic(const DirectedGraph& g);

// Every edge lies on a directed cycle (loops count as 1-cycles); true for
// the edgeless graph.
bool is_totally_cyclic(const DirectedGraph& g);

// Number of weakly connected components, isolated vertices included.
int betti0(const DirectedGraph& g);
int betti0(const UndirectedGraph& g);

// Vertices incident to no edge, ascending.
std::vector<int> isolated_vertices(const DirectedGraph& g);
std::vector<int> isolated_vertices(const UndirectedGraph& g);

// Vertices with no outgoing edge (a loop counts as outgoing), ascending.
std::vector<int> sinks(const DirectedGraph& g);

std::string to_string(const DirectedGraph& g);
std::string to_string(const UndirectedGraph& g);

// Parsers for the canonical text forms; errors carry the offending position.
DirectedGraph parse_directed(const std::string& text);
UndirectedGraph parse_undirected(const std::string& text);

}  // namespace graphpoly
