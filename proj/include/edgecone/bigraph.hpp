#pragma once

#include "edgecone/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edgecone {

constexpr int kMaxVertices = 64;

// vertex v (1-based) is bit v-1
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet of(std::initializer_list<int> vs);
    static VertexSet range(int first, int last);

    std::uint64_t bits() const { return bits_; }
    bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }
    int min() const { return __builtin_ctzll(bits_) + 1; }
    std::vector<int> members() const;
    VertexSet& insert(int v)
    {
        bits_ |= std::uint64_t(1) << (v - 1);
        return *this;
    }
    VertexSet& erase(int v)
    {
        bits_ &= ~(std::uint64_t(1) << (v - 1));
        return *this;
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    int left;  // 1..m
    int right; // m+1..m+n
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

using EdgeMask = boost::dynamic_bitset<>;

class BipartiteGraph {
public:
    BipartiteGraph(int m, int n, std::vector<Edge> edges);

    int m() const { return data_->m; }
    int n() const { return data_->n; }
    int vertex_count() const { return data_->m + data_->n; }
    const std::vector<Edge>& edges() const { return data_->edges; }
    int edge_index(int u, int v) const;
    VertexSet left() const { return VertexSet::range(1, m()); }
    VertexSet right() const { return VertexSet::range(m() + 1, m() + n()); }
    VertexSet vertices() const { return VertexSet::range(1, vertex_count()); }
    VertexSet adjacent(int v) const { return data_->adjacency[v - 1]; }
    bool has_edge(int u, int v) const { return adjacent(u).contains(v); }
    int component_count() const { return data_->components; }
    bool connected() const { return data_->components == 1; }
    EdgeMask all_edges() const;
    QuotientContext context() const { return QuotientContext::bipartite(m(), n()); }
    bool operator==(const BipartiteGraph& o) const;

private:
    struct Data {
        int m = 0;
        int n = 0;
        std::vector<Edge> edges;
        std::vector<VertexSet> adjacency;
        int components = 0;
    };
    std::shared_ptr<const Data> data_;
};

enum class SetKind { OneSidedLeft, OneSidedRight, TwoSided };

struct IndependentSet {
    VertexSet left;
    VertexSet right;

    VertexSet all() const { return left | right; }
    SetKind kind() const;
    bool operator==(const IndependentSet&) const = default;
    auto operator<=>(const IndependentSet&) const = default;
};

class SpanningSubgraph {
public:
    SpanningSubgraph(BipartiteGraph parent, EdgeMask kept);
    const BipartiteGraph& parent() const { return parent_; }
    const EdgeMask& kept() const { return kept_; }
    std::vector<Edge> edges() const;
    bool operator==(const SpanningSubgraph& o) const { return kept_ == o.kept_ && parent_ == o.parent_; }

private:
    BipartiteGraph parent_;
    EdgeMask kept_;
};

struct FirstIndependentSet {
    IndependentSet base;
    SetKind kind() const { return base.kind(); }
    bool operator==(const FirstIndependentSet&) const = default;
};

VertexSet neighbor_set(const BipartiteGraph& g, VertexSet s);
bool is_independent(const BipartiteGraph& g, VertexSet s);
std::vector<VertexSet> connected_components(const SpanningSubgraph& h);
int component_count(const SpanningSubgraph& h);
std::vector<VertexSet> induced_components(const BipartiteGraph& g, VertexSet within);
bool induced_connected(const BipartiteGraph& g, VertexSet within);
SpanningSubgraph induced_spanning(const BipartiteGraph& g, VertexSet within);
SpanningSubgraph associated_subgraph(const BipartiteGraph& g, const IndependentSet& a);
SpanningSubgraph intersection_subgraph(const BipartiteGraph& g, std::span<const IndependentSet> s);
SpanningSubgraph intersection_subgraph(std::span<const SpanningSubgraph> s);
MVector degree_sequence(const SpanningSubgraph& h);
bool is_maximal_two_sided(const BipartiteGraph& g, const IndependentSet& a);
// brute force: no vertex can be added while staying independent and two-sided
bool is_set_maximal(const BipartiteGraph& g, const IndependentSet& a);
std::vector<FirstIndependentSet> enumerate_first_independent_sets(const BipartiteGraph& g);
IndependentSet make_independent_set(const BipartiteGraph& g, VertexSet s);

std::string format_set(VertexSet s);
std::string format_independent_set(const IndependentSet& a);

BipartiteGraph complete_bipartite(int m, int n);
// K_{m,n} without the edges between c1 and c2
BipartiteGraph complete_minus(int m, int n, VertexSet c1, VertexSet c2);

// JSON {"m","n","edges"} or the text form "m n" followed by "i j" lines
BipartiteGraph parse_graph(std::string_view text);
std::string graph_to_json(const BipartiteGraph& g);

} // namespace edgecone
