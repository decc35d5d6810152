#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orient/bitset.hpp"

namespace orient {

// Simple undirected labeled graph on vertices 0..n-1. Immutable after
// construction; safe to share across threads.
class Graph {
public:
    Graph() = default;
    // Validates labels, rejects self-loops and duplicate edges. Edges are
    // stored canonically as (u, v) with u < v, sorted lexicographically.
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[std::size_t(id)]; }

    bool adjacent(int u, int v) const { return adj_[std::size_t(u)].test(v); }
    // -1 if the pair is not an edge.
    int edge_id(int u, int v) const;
    const Bitset& neighbors(int v) const { return adj_[std::size_t(v)]; }
    int degree(int v) const { return adj_[std::size_t(v)].count(); }
    std::vector<int> neighbor_list(int v) const { return adj_[std::size_t(v)].to_vector(); }

    // Text format: first line "n m", then m lines "u v" (0-based).
    std::string to_text() const;
    static Graph from_text(const std::string& text);
    // FNV-1a of the canonical text form.
    std::uint64_t hash() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adj_;
    std::unordered_map<std::uint64_t, int> edge_ids_;
};

// G(n, p) with per-edge presence derived from (seed, u, v) via SplitMix64,
// so generation is order independent and bit-reproducible.
Graph gnp(int n, double p, std::uint64_t seed);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Directed graph: no self-loops, at most one arc per ordered pair.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arc_list);

    int vertex_count() const { return n_; }
    int arc_count() const { return int(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    bool has_arc(int u, int v) const { return out_[std::size_t(u)].test(v); }
    const Bitset& out_neighbors(int v) const { return out_[std::size_t(v)]; }
    const Bitset& in_neighbors(int v) const { return in_[std::size_t(v)]; }

    // Underlying simple graph; a digon collapses to a single edge.
    Graph underlying() const;

    std::string to_text() const;
    static Digraph from_text(const std::string& text);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<Bitset> out_, in_;
};

// Permutation of 0..n-1 with O(1) rank lookup. perm[i] is the vertex at
// rank i; "forward" for an edge means lower rank to higher rank, and the
// length of an edge is the rank difference of its endpoints.
class VertexOrder {
public:
    VertexOrder() = default;
    explicit VertexOrder(std::vector<int> perm);
    static VertexOrder identity(int n);

    int size() const { return int(perm_.size()); }
    int at(int i) const { return perm_[std::size_t(i)]; }
    int rank(int v) const { return rank_[std::size_t(v)]; }
    const std::vector<int>& permutation() const { return perm_; }

    int edge_length(int u, int v) const {
        int d = rank(u) - rank(v);
        return d < 0 ? -d : d;
    }

private:
    std::vector<int> perm_, rank_;
};

} // namespace orient
