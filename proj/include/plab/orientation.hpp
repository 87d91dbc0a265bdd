#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "plab/plabic_graph.hpp"

namespace plab {

struct NotOrientable : std::runtime_error {
    NotOrientable() : std::runtime_error("graph admits no perfect orientation") {}
};
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Edge directions for a (reverse) perfect orientation. dir[e] is 0 when the
// edge runs edge(e).u -> edge(e).v and 1 for the opposite; dead edges hold -1.
struct Orientation {
    bool reverse_flavor = false;
    std::vector<int> dir;

    bool from_u(int e) const { return dir[e] == 0; }
    int head(const PlabicGraph& g, int e) const { return dir[e] == 0 ? g.edge(e).v : g.edge(e).u; }
    int tail(const PlabicGraph& g, int e) const { return dir[e] == 0 ? g.edge(e).u : g.edge(e).v; }
};

// Source set: boundary positions whose edge is directed into the graph.
std::vector<int> source_set(const PlabicGraph& g, const Orientation& o);
bool is_acyclic(const PlabicGraph& g, const Orientation& o);
std::vector<int> topological_order(const PlabicGraph& g, const Orientation& o);

// Enumerates orientations where every internal black vertex has out-degree
// exactly one and every internal white in-degree exactly one (a perfect
// orientation), or the color-swapped condition (reverse). The callback may
// return false to stop. Throws CapExceeded past `cap` emitted orientations.
void for_each_orientation(const PlabicGraph& g, bool reverse, long cap,
                          const std::function<bool(const Orientation&)>& fn);

std::vector<Orientation> enumerate_perfect_orientations(const PlabicGraph& g, long cap = 100000);

// Source sets of perfect orientations, deduplicated: the positroid bases.
std::set<std::vector<int>> positroid_bases(const PlabicGraph& g, long cap = 100000);

struct TypeDim {
    int k = 0, n = 0, dim = 0;
};
TypeDim type_and_dim(const PlabicGraph& g);

// An acyclic reverse perfect orientation; with a preferred start i, the one
// whose source set is lexicographically minimal in the cyclic order
// i < i+1 < ... < n < 1 < ... < i-1.
Orientation find_acyclic_reverse_po(const PlabicGraph& g, std::optional<int> preferred_start = std::nullopt,
                                    long cap = 1000000);

std::vector<Orientation> enumerate_acyclic_reverse_pos(const PlabicGraph& g, long cap = 10000);

Orientation reversed(const Orientation& o);

}  // namespace plab
