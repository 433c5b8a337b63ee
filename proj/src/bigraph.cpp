#include "edgecone/bigraph.hpp"

#include "edgecone/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace edgecone {

VertexSet VertexSet::of(std::initializer_list<int> vs)
{
    VertexSet s;
    for (int v : vs)
        s.insert(v);
    return s;
}

VertexSet VertexSet::range(int first, int last)
{
    VertexSet s;
    for (int v = first; v <= last; ++v)
        s.insert(v);
    return s;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        out.push_back(__builtin_ctzll(b) + 1);
    return out;
}

namespace {

VertexSet grow(const std::vector<VertexSet>& adj, VertexSet within, int seed)
{
    VertexSet seen = VertexSet::of({seed});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier.members())
            next = next | adj[v - 1];
        next = (next & within) - seen;
        seen = seen | next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components_of(const std::vector<VertexSet>& adj, VertexSet within)
{
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet c = grow(adj, within, rest.min());
        out.push_back(c);
        rest = rest - c;
    }
    return out;
}

} // namespace

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<Edge> edges)
{
    if (m < 1 || n < 1)
        throw ParseError("graph needs m >= 1 and n >= 1");
    if (m + n > kMaxVertices)
        throw LimitError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    auto d = std::make_shared<Data>();
    d->m = m;
    d->n = n;
    d->adjacency.assign(m + n, VertexSet());
    for (const Edge& e : edges) {
        if (e.left < 1 || e.left > m || e.right <= m || e.right > m + n)
            throw ParseError("edge (" + std::to_string(e.left) + "," + std::to_string(e.right) +
                             ") is out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError("duplicate edge");
    for (const Edge& e : edges) {
        d->adjacency[e.left - 1].insert(e.right);
        d->adjacency[e.right - 1].insert(e.left);
    }
    d->edges = std::move(edges);
    d->components = static_cast<int>(components_of(d->adjacency, VertexSet::range(1, m + n)).size());
    data_ = std::move(d);
}

int BipartiteGraph::edge_index(int u, int v) const
{
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges().begin(), edges().end(), e);
    if (it == edges().end() || !(*it == e))
        return -1;
    return static_cast<int>(it - edges().begin());
}

EdgeMask BipartiteGraph::all_edges() const
{
    EdgeMask mask(edges().size());
    mask.set();
    return mask;
}

bool BipartiteGraph::operator==(const BipartiteGraph& o) const
{
    return data_ == o.data_ || (m() == o.m() && n() == o.n() && edges() == o.edges());
}

SetKind IndependentSet::kind() const
{
    if (right.empty())
        return SetKind::OneSidedLeft;
    if (left.empty())
        return SetKind::OneSidedRight;
    return SetKind::TwoSided;
}

SpanningSubgraph::SpanningSubgraph(BipartiteGraph parent, EdgeMask kept)
    : parent_(std::move(parent)), kept_(std::move(kept))
{
    if (kept_.size() != parent_.edges().size())
        throw InternalError("edge mask does not match its parent graph");
}

std::vector<Edge> SpanningSubgraph::edges() const
{
    std::vector<Edge> out;
    for (size_t i = kept_.find_first(); i != EdgeMask::npos; i = kept_.find_next(i))
        out.push_back(parent_.edges()[i]);
    return out;
}

static void check_vertices(const BipartiteGraph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw PreconditionError("vertex set " + format_set(s) + " is out of range");
}

VertexSet neighbor_set(const BipartiteGraph& g, VertexSet s)
{
    check_vertices(g, s);
    VertexSet out;
    for (int v : s.members())
        out = out | g.adjacent(v);
    return out;
}

bool is_independent(const BipartiteGraph& g, VertexSet s)
{
    return (neighbor_set(g, s) & s).empty();
}

std::vector<VertexSet> connected_components(const SpanningSubgraph& h)
{
    const BipartiteGraph& g = h.parent();
    std::vector<VertexSet> adj(g.vertex_count());
    for (const Edge& e : h.edges()) {
        adj[e.left - 1].insert(e.right);
        adj[e.right - 1].insert(e.left);
    }
    return components_of(adj, g.vertices());
}

int component_count(const SpanningSubgraph& h)
{
    return static_cast<int>(connected_components(h).size());
}

std::vector<VertexSet> induced_components(const BipartiteGraph& g, VertexSet within)
{
    std::vector<VertexSet> adj(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v)
        adj[v - 1] = g.adjacent(v);
    return components_of(adj, within);
}

bool induced_connected(const BipartiteGraph& g, VertexSet within)
{
    if (within.empty())
        return false;
    std::vector<VertexSet> adj(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v)
        adj[v - 1] = g.adjacent(v);
    return grow(adj, within, within.min()) == within;
}

SpanningSubgraph induced_spanning(const BipartiteGraph& g, VertexSet within)
{
    EdgeMask kept(g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        if (within.contains(e.left) && within.contains(e.right))
            kept.set(i);
    }
    return SpanningSubgraph(g, std::move(kept));
}

static EdgeMask edges_inside(const BipartiteGraph& g, VertexSet a, VertexSet b)
{
    EdgeMask kept(g.edges().size());
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        bool in_a = a.contains(e.left) && a.contains(e.right);
        bool in_b = b.contains(e.left) && b.contains(e.right);
        if (in_a || in_b)
            kept.set(i);
    }
    return kept;
}

SpanningSubgraph associated_subgraph(const BipartiteGraph& g, const IndependentSet& a)
{
    check_vertices(g, a.all());
    if (!a.left.subset_of(g.left()) || !a.right.subset_of(g.right()))
        throw PreconditionError("independent set sides are mislabeled");
    if (!is_independent(g, a.all()))
        throw PreconditionError("set " + format_independent_set(a) + " is not independent");
    VertexSet first, second;
    switch (a.kind()) {
    case SetKind::OneSidedLeft: {
        VertexSet na = neighbor_set(g, a.left);
        first = a.left | na;
        second = (g.left() - a.left) | (g.right() - na);
        break;
    }
    case SetKind::OneSidedRight: {
        VertexSet na = neighbor_set(g, a.right);
        first = a.right | na;
        second = (g.right() - a.right) | (g.left() - na);
        break;
    }
    case SetKind::TwoSided:
        first = a.left | neighbor_set(g, a.left);
        second = a.right | neighbor_set(g, a.right);
        break;
    }
    return SpanningSubgraph(g, edges_inside(g, first, second));
}

SpanningSubgraph intersection_subgraph(const BipartiteGraph& g, std::span<const IndependentSet> s)
{
    EdgeMask kept = g.all_edges();
    for (const IndependentSet& a : s)
        kept &= associated_subgraph(g, a).kept();
    return SpanningSubgraph(g, std::move(kept));
}

SpanningSubgraph intersection_subgraph(std::span<const SpanningSubgraph> s)
{
    if (s.empty())
        throw PreconditionError("intersection of no subgraphs");
    EdgeMask kept = s[0].kept();
    for (const SpanningSubgraph& h : s.subspan(1)) {
        if (!(h.parent() == s[0].parent()))
            throw PreconditionError("subgraphs of different graphs");
        kept &= h.kept();
    }
    return SpanningSubgraph(s[0].parent(), std::move(kept));
}

MVector degree_sequence(const SpanningSubgraph& h)
{
    const BipartiteGraph& g = h.parent();
    IntVector deg(g.vertex_count(), Integer(0));
    for (const Edge& e : h.edges()) {
        deg[e.left - 1] += 1;
        deg[e.right - 1] += 1;
    }
    return MVector(g.context(), std::move(deg));
}

bool is_maximal_two_sided(const BipartiteGraph& g, const IndependentSet& a)
{
    if (a.kind() != SetKind::TwoSided)
        return false;
    return neighbor_set(g, a.right) == g.left() - a.left &&
           a.right == g.right() - neighbor_set(g, a.left);
}

bool is_set_maximal(const BipartiteGraph& g, const IndependentSet& a)
{
    VertexSet s = a.all();
    if (!is_independent(g, s))
        return false;
    for (int v : (g.vertices() - s).members())
        if (is_independent(g, VertexSet(s).insert(v)))
            return false;
    return true;
}

IndependentSet make_independent_set(const BipartiteGraph& g, VertexSet s)
{
    check_vertices(g, s);
    return IndependentSet{s & g.left(), s & g.right()};
}

std::vector<FirstIndependentSet> enumerate_first_independent_sets(const BipartiteGraph& g)
{
    if (!g.connected())
        throw PreconditionError("graph is disconnected");
    if (g.vertex_count() < 3)
        throw PreconditionError("graphs need at least three vertices");
    std::vector<FirstIndependentSet> out;
    auto accept = [&](const IndependentSet& a) {
        if (component_count(associated_subgraph(g, a)) == 2)
            out.push_back(FirstIndependentSet{a});
    };
    for (int u : g.left().members()) {
        VertexSet a = g.left() - VertexSet::of({u});
        if (!a.empty() && neighbor_set(g, a) == g.right())
            accept(IndependentSet{a, VertexSet()});
    }
    for (int u : g.right().members()) {
        VertexSet a = g.right() - VertexSet::of({u});
        if (!a.empty() && neighbor_set(g, a) == g.left())
            accept(IndependentSet{VertexSet(), a});
    }

    std::vector<IndependentSet> two_sided;
    bool from_left = g.m() <= g.n();
    VertexSet side = from_left ? g.left() : g.right();
    VertexSet other = from_left ? g.right() : g.left();
    std::vector<int> sv = side.members();
    const std::uint64_t count = std::uint64_t(1) << sv.size();
    for (std::uint64_t mask = 1; mask + 1 < count; ++mask) {
        VertexSet s;
        for (size_t i = 0; i < sv.size(); ++i)
            if ((mask >> i) & 1u)
                s.insert(sv[i]);
        VertexSet t = other - neighbor_set(g, s);
        if (t.empty() || neighbor_set(g, t) != side - s)
            continue;
        IndependentSet a = from_left ? IndependentSet{s, t} : IndependentSet{t, s};
        two_sided.push_back(a);
    }
    std::sort(two_sided.begin(), two_sided.end(), [](const IndependentSet& x, const IndependentSet& y) {
        return x.all().members() < y.all().members();
    });
    for (const IndependentSet& a : two_sided)
        accept(a);
    return out;
}

std::string format_set(VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : s.members()) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string format_independent_set(const IndependentSet& a)
{
    switch (a.kind()) {
    case SetKind::OneSidedLeft:
        return format_set(a.left);
    case SetKind::OneSidedRight:
        return format_set(a.right);
    case SetKind::TwoSided:
        break;
    }
    return format_set(a.left) + "+" + format_set(a.right);
}

BipartiteGraph complete_bipartite(int m, int n)
{
    return complete_minus(m, n, VertexSet(), VertexSet());
}

BipartiteGraph complete_minus(int m, int n, VertexSet c1, VertexSet c2)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = m + 1; j <= m + n; ++j)
            if (!(c1.contains(i) && c2.contains(j)))
                edges.push_back({i, j});
    return BipartiteGraph(m, n, std::move(edges));
}

namespace {

BipartiteGraph parse_json_graph(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs keys m, n and edges");
    if (!j["m"].is_number_integer() || !j["n"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("graph JSON has wrongly typed fields");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return BipartiteGraph(j["m"].get<int>(), j["n"].get<int>(), std::move(edges));
}

BipartiteGraph parse_text_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::vector<long long>> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> row;
        long long x;
        while (ls >> x)
            row.push_back(x);
        if (!ls.eof())
            throw ParseError("unexpected token in graph text: " + line);
        if (!row.empty())
            rows.push_back(row);
    }
    if (rows.empty() || rows[0].size() != 2)
        throw ParseError("graph text must start with a line \"m n\"");
    std::vector<Edge> edges;
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw ParseError("graph text edge lines must contain two integers");
        edges.push_back({static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1])});
    }
    return BipartiteGraph(static_cast<int>(rows[0][0]), static_cast<int>(rows[0][1]), std::move(edges));
}

} // namespace

BipartiteGraph parse_graph(std::string_view text)
{
    size_t p = text.find_first_not_of(" \t\r\n");
    if (p != std::string_view::npos && text[p] == '{')
        return parse_json_graph(text);
    return parse_text_graph(text);
}

std::string graph_to_json(const BipartiteGraph& g)
{
    nlohmann::ordered_json j;
    j["m"] = g.m();
    j["n"] = g.n();
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({e.left, e.right});
    return j.dump();
}

} // namespace edgecone
