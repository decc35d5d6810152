#include "orient/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orient/rng.hpp"

namespace orient {

namespace {

std::uint64_t pair_key(int u, int v) {
    return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
}

void check_label(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex label " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

} // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(std::size_t(n), Bitset(n));
    for (auto& [u, v] : edge_list) {
        check_label(u, n, "Graph");
        check_label(v, n, "Graph");
        if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i)
        if (edge_list[i] == edge_list[i - 1])
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(edge_list[i].first) +
                                        ", " + std::to_string(edge_list[i].second) + ")");
    edges_ = std::move(edge_list);
    edge_ids_.reserve(edges_.size() * 2);
    for (int id = 0; id < int(edges_.size()); ++id) {
        auto [u, v] = edges_[std::size_t(id)];
        adj_[std::size_t(u)].set(v);
        adj_[std::size_t(v)].set(u);
        edge_ids_.emplace(pair_key(u, v), id);
    }
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_ids_.find(pair_key(u, v));
    return it == edge_ids_.end() ? -1 : it->second;
}

std::string Graph::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) os << u << ' ' << v << '\n';
    return os.str();
}

namespace {

std::vector<std::pair<int, int>> parse_pair_lines(const std::string& text, int& n_out) {
    std::istringstream is(text);
    long long n = -1, m = -1;
    if (!(is >> n >> m)) throw std::invalid_argument("graph text: missing header \"n m\"");
    if (n < 0 || m < 0) throw std::invalid_argument("graph text: negative header values");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(is >> u >> v))
            throw std::invalid_argument("graph text: expected " + std::to_string(m) + " pairs, got " +
                                        std::to_string(i));
        pairs.emplace_back(int(u), int(v));
    }
    long long extra;
    if (is >> extra) throw std::invalid_argument("graph text: trailing data after " + std::to_string(m) + " pairs");
    n_out = int(n);
    return pairs;
}

} // namespace

Graph Graph::from_text(const std::string& text) {
    int n = 0;
    auto pairs = parse_pair_lines(text, n);
    return Graph(n, std::move(pairs));
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_text()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p outside [0, 1]");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_from_bits(mix3(seed, std::uint64_t(u), std::uint64_t(v))) < p)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arc_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    out_.assign(std::size_t(n), Bitset(n));
    in_.assign(std::size_t(n), Bitset(n));
    for (auto [u, v] : arc_list) {
        check_label(u, n, "Digraph");
        check_label(v, n, "Digraph");
        if (u == v) throw std::invalid_argument("Digraph: self-loop at " + std::to_string(u));
    }
    std::sort(arc_list.begin(), arc_list.end());
    for (std::size_t i = 1; i < arc_list.size(); ++i)
        if (arc_list[i] == arc_list[i - 1])
            throw std::invalid_argument("Digraph: duplicate arc (" + std::to_string(arc_list[i].first) +
                                        ", " + std::to_string(arc_list[i].second) + ")");
    arcs_ = std::move(arc_list);
    for (auto [u, v] : arcs_) {
        out_[std::size_t(u)].set(v);
        in_[std::size_t(v)].set(u);
    }
}

Graph Digraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : arcs_) {
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n_, std::move(edges));
}

std::string Digraph::to_text() const {
    std::ostringstream os;
    os << n_ << ' ' << arcs_.size() << '\n';
    for (auto [u, v] : arcs_) os << u << ' ' << v << '\n';
    return os.str();
}

Digraph Digraph::from_text(const std::string& text) {
    int n = 0;
    auto pairs = parse_pair_lines(text, n);
    return Digraph(n, std::move(pairs));
}

VertexOrder::VertexOrder(std::vector<int> perm) : perm_(std::move(perm)) {
    int n = int(perm_.size());
    rank_.assign(std::size_t(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = perm_[std::size_t(i)];
        check_label(v, n, "VertexOrder");
        if (rank_[std::size_t(v)] != -1)
            throw std::invalid_argument("VertexOrder: vertex " + std::to_string(v) + " repeated");
        rank_[std::size_t(v)] = i;
    }
}

VertexOrder VertexOrder::identity(int n) {
    std::vector<int> perm(std::size_t(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    return VertexOrder(std::move(perm));
}

} // namespace orient
