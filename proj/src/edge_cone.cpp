#include "edgecone/edge_cone.hpp"

#include "edgecone/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace edgecone {

IntMatrix dual_generators(const BipartiteGraph& g)
{
    IntMatrix out;
    for (const Edge& e : g.edges()) {
        IntVector v(g.vertex_count(), Integer(0));
        v[e.left - 1] = 1;
        v[e.right - 1] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

bool is_first_independent_set(const BipartiteGraph& g, const IndependentSet& a)
{
    if (!a.left.subset_of(g.left()) || !a.right.subset_of(g.right()) || a.all().empty())
        return false;
    if (!is_independent(g, a.all()))
        return false;
    switch (a.kind()) {
    case SetKind::OneSidedLeft:
        if (a.left.size() != g.m() - 1 || neighbor_set(g, a.left) != g.right())
            return false;
        break;
    case SetKind::OneSidedRight:
        if (a.right.size() != g.n() - 1 || neighbor_set(g, a.right) != g.left())
            return false;
        break;
    case SetKind::TwoSided:
        if (!is_maximal_two_sided(g, a))
            return false;
        break;
    }
    return component_count(associated_subgraph(g, a)) == 2;
}

NVector ray_of(const BipartiteGraph& g, const IndependentSet& a)
{
    if (!is_first_independent_set(g, a))
        throw PreconditionError(format_independent_set(a) + " is not a first independent set");
    QuotientContext ctx = g.context();
    IntVector raw(g.vertex_count(), Integer(0));
    switch (a.kind()) {
    case SetKind::OneSidedLeft:
        raw[(g.left() - a.left).min() - 1] = 1;
        break;
    case SetKind::OneSidedRight:
        raw[(g.right() - a.right).min() - 1] = 1;
        break;
    case SetKind::TwoSided:
        for (int i : (g.left() - a.left).members())
            raw[i - 1] = 1;
        for (int j : a.right.members())
            raw[j - 1] = -1;
        break;
    }
    return primitive_part(canonicalize(raw, ctx));
}

EdgeConePair build_edge_cone(const BipartiteGraph& g)
{
    if (!g.connected())
        throw PreconditionError("graph is disconnected");
    if (g.vertex_count() < 3)
        throw PreconditionError("graphs need at least three vertices");
    QuotientContext ctx = g.context();
    IntMatrix reduced;
    for (const IntVector& v : dual_generators(g))
        reduced.push_back(ctx.reduce_m(v));
    Cone dual = Cone::from_generators(reduced);
    if (dual.dim() != g.vertex_count() - 1)
        throw InternalError("dual edge cone has dimension " + std::to_string(dual.dim()));
    if (dual.rays().size() != reduced.size())
        throw InternalError("an edge generator is not extremal");

    std::vector<FirstIndependentSet> sets = enumerate_first_independent_sets(g);
    std::vector<NVector> rays;
    IntMatrix reduced_rays;
    for (const FirstIndependentSet& a : sets) {
        rays.push_back(ray_of(g, a.base));
        reduced_rays.push_back(ctx.reduce_n(rays.back().coords()));
    }
    Cone primal = Cone::from_generators(reduced_rays);
    if (primal.rays() != reduced_rays)
        throw InternalError("first independent sets do not map to distinct extremal rays");
    IntMatrix a = primal.rays(), b = dual.facet_normals();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw InternalError("extremal rays from independent sets differ from the dualized cone");

    std::vector<SpanningSubgraph> subgraphs;
    for (const FirstIndependentSet& s : sets)
        subgraphs.push_back(associated_subgraph(g, s.base));

    std::vector<int> facet_edge;
    for (const IntVector& f : primal.facet_normals()) {
        auto it = std::find(reduced.begin(), reduced.end(), f);
        if (it == reduced.end())
            throw InternalError("facet of the edge cone is not an edge generator");
        facet_edge.push_back(static_cast<int>(it - reduced.begin()));
    }
    for (size_t i = 0; i < sets.size(); ++i) {
        EdgeMask through(g.edges().size());
        const IndexSet& fs = primal.facets_of_ray(static_cast<int>(i));
        for (size_t f = fs.find_first(); f != IndexSet::npos; f = fs.find_next(f))
            through.set(facet_edge[f]);
        if (through != subgraphs[i].kept())
            throw InternalError("facet of " + format_independent_set(sets[i].base) +
                                " is not generated by the edges of its subgraph");
    }
    return EdgeConePair{g, ctx, std::move(dual), std::move(primal), std::move(sets), std::move(rays),
                        std::move(subgraphs), std::move(facet_edge)};
}

namespace {

EdgeMask intersect(const EdgeConePair& e, std::span<const int> s)
{
    EdgeMask kept = e.graph.all_edges();
    for (int i : s) {
        if (i < 0 || i >= e.ray_count())
            throw PreconditionError("ray index out of range");
        kept &= e.subgraphs[i].kept();
    }
    return kept;
}

std::vector<int> saturate(const EdgeConePair& e, const EdgeMask& kept)
{
    std::vector<int> out;
    for (int i = 0; i < e.ray_count(); ++i)
        if (kept.is_subset_of(e.subgraphs[i].kept()))
            out.push_back(i);
    return out;
}

} // namespace

FaceSpan face_span(const EdgeConePair& e, std::span<const int> s)
{
    EdgeMask kept = intersect(e, s);
    FaceSpan out;
    out.dim = component_count(SpanningSubgraph(e.graph, kept)) - 1;
    out.rays = saturate(e, kept);
    std::vector<int> given(s.begin(), s.end());
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    out.exact = given == out.rays;
    return out;
}

std::optional<int> spans_face(const EdgeConePair& e, std::span<const int> s)
{
    FaceSpan f = face_span(e, s);
    if (f.exact && f.dim == static_cast<int>(s.size()))
        return f.dim;
    return std::nullopt;
}

FaceDescriptor face_of_independent_set(const EdgeConePair& e, const IndependentSet& a)
{
    SpanningSubgraph h = associated_subgraph(e.graph, a);
    FaceDescriptor out;
    out.dim = component_count(h) - 1;
    out.rays = saturate(e, h.kept());
    for (size_t f = 0; f < e.facet_edge.size(); ++f)
        if (h.kept().test(e.facet_edge[f]))
            out.facets.push_back(static_cast<int>(f));
    return out;
}

CCType cc_type_of(const IndependentSet& c, const IndependentSet& d)
{
    bool meet1 = !(c.left & d.left).empty();
    bool meet2 = !(c.right & d.right).empty();
    if (!meet1 && !meet2)
        return CCType::II;
    if (meet1 && !meet2)
        return CCType::III;
    if (!meet1 && meet2)
        return CCType::IV;
    auto proper = [](VertexSet x, VertexSet y) { return x.subset_of(y) && x != y; };
    if ((proper(c.left, d.left) && proper(d.right, c.right)) || (proper(d.left, c.left) && proper(c.right, d.right)))
        return CCType::I;
    return CCType::V;
}

namespace {

char letter(SetKind k)
{
    switch (k) {
    case SetKind::OneSidedLeft:
        return 'A';
    case SetKind::OneSidedRight:
        return 'B';
    case SetKind::TwoSided:
        break;
    }
    return 'C';
}

int missing(const BipartiteGraph& g, const IndependentSet& a)
{
    if (a.kind() == SetKind::OneSidedLeft)
        return (g.left() - a.left).min();
    return (g.right() - a.right).min();
}

bool connected_on(const BipartiteGraph& g, VertexSet s)
{
    return induced_connected(g, s);
}

// one-sided U1\{a} against two-sided c; the right-sided case runs on the mirrored data
bool ac_two_face(const BipartiteGraph& g, VertexSet side1, VertexSet side2, int a, VertexSet c1, VertexSet c2)
{
    (void)side1;
    if (c1 == VertexSet::of({a}))
        return c2.size() == side2.size() - 1;
    if (!c1.contains(a))
        return connected_on(g, c2 | (neighbor_set(g, c2) - VertexSet::of({a})));
    return connected_on(g, (c1 - VertexSet::of({a})) | neighbor_set(g, c1));
}

bool cc_two_face(const BipartiteGraph& g, const IndependentSet& c, const IndependentSet& d, CCType t)
{
    VertexSet u1 = g.left(), u2 = g.right();
    auto proper = [](VertexSet x, VertexSet y) { return x.subset_of(y) && x != y; };
    switch (t) {
    case CCType::I:
        if (proper(c.left, d.left))
            return connected_on(g, (d.left - c.left) | (c.right - d.right));
        return connected_on(g, (c.left - d.left) | (d.right - c.right));
    case CCType::II: {
        VertexSet l = c.left | d.left, r = c.right | d.right;
        return ((u1 - l).size() == 1 && r == u2) || ((u2 - r).size() == 1 && l == u1);
    }
    case CCType::III:
        return (c.left | d.left) == u1 && connected_on(g, (c.left & d.left) | (u2 - (c.right | d.right)));
    case CCType::IV:
        return (c.right | d.right) == u2 && connected_on(g, (c.right & d.right) | (u1 - (c.left | d.left)));
    case CCType::V:
    case CCType::NotApplicable:
        break;
    }
    return false;
}

} // namespace

PairClass classify_pair(const EdgeConePair& e, int i, int j)
{
    if (i == j)
        throw PreconditionError("a pair needs two distinct rays");
    if (i > j)
        std::swap(i, j);
    if (i < 0 || j >= e.ray_count())
        throw PreconditionError("ray index out of range");
    const BipartiteGraph& g = e.graph;
    IndependentSet p = e.sets[i].base, q = e.sets[j].base;
    if (letter(p.kind()) > letter(q.kind()))
        std::swap(p, q);
    std::string shape{letter(p.kind()), letter(q.kind())};

    PairClass out;
    out.first = i;
    out.second = j;
    if (shape == "AA") {
        out.shape = PairShape::AA;
        out.is_two_face = connected_on(g, (p.left & q.left) | g.right());
    } else if (shape == "BB") {
        out.shape = PairShape::BB;
        out.is_two_face = connected_on(g, (p.right & q.right) | g.left());
    } else if (shape == "AB") {
        out.shape = PairShape::AB;
        out.is_two_face = connected_on(g, p.left | q.right);
    } else if (shape == "AC") {
        out.shape = PairShape::AC;
        out.is_two_face = ac_two_face(g, g.left(), g.right(), missing(g, p), q.left, q.right);
    } else if (shape == "BC") {
        out.shape = PairShape::BC;
        out.is_two_face = ac_two_face(g, g.right(), g.left(), missing(g, p), q.right, q.left);
    } else {
        out.shape = PairShape::CC;
        out.cc_type = cc_type_of(p, q);
        out.is_two_face = cc_two_face(g, p, q, out.cc_type);
    }

    std::vector<int> s{i, j};
    bool truth = spans_face(e, s).has_value();
    if (truth != out.is_two_face)
        throw InternalError("pair " + format_independent_set(e.sets[i].base) + ", " +
                            format_independent_set(e.sets[j].base) + " of shape " + to_string(out.shape) +
                            ": graph conditions and component count disagree");
    return out;
}

std::string to_string(PairShape s)
{
    switch (s) {
    case PairShape::AA:
        return "AA";
    case PairShape::AB:
        return "AB";
    case PairShape::BB:
        return "BB";
    case PairShape::AC:
        return "AC";
    case PairShape::BC:
        return "BC";
    case PairShape::CC:
        return "CC";
    }
    return "?";
}

std::string to_string(CCType t)
{
    switch (t) {
    case CCType::NotApplicable:
        return "n/a";
    case CCType::I:
        return "i";
    case CCType::II:
        return "ii";
    case CCType::III:
        return "iii";
    case CCType::IV:
        return "iv";
    case CCType::V:
        return "v";
    }
    return "?";
}

std::string to_string(CaseTag t)
{
    switch (t) {
    case CaseTag::AaBc:
        return "AA|BC";
    case CaseTag::AaCcII:
        return "AA|CC-ii";
    case CaseTag::AbCc:
        return "AB|CC";
    case CaseTag::AcBc:
        return "AC|BC";
    case CaseTag::CcIIIAc:
        return "CC-iii|AC";
    case CaseTag::CcIIIBc:
        return "CC-iii|BC";
    case CaseTag::CcIIICcIV:
        return "CC-iii|CC-iv";
    case CaseTag::CcVCcI:
        return "CC-v|CC-i";
    case CaseTag::WholeCone:
        return "whole-cone";
    case CaseTag::Unclassified:
        break;
    }
    return "unclassified";
}

namespace {

struct Role {
    char kind;
    IndependentSet set;
};

std::optional<CaseTag> match(const std::vector<Role>& roles, const std::vector<std::pair<int, int>>& diag,
                             const std::vector<CCType>& diag_type)
{
    auto kinds = [&](const std::pair<int, int>& d) {
        std::string s{roles[d.first].kind, roles[d.second].kind};
        std::sort(s.begin(), s.end());
        return s;
    };
    std::string k0 = kinds(diag[0]), k1 = kinds(diag[1]);
    std::string all;
    for (const Role& r : roles)
        all += r.kind;
    std::sort(all.begin(), all.end());
    for (int swap = 0; swap < 2; ++swap) {
        const std::string& x = swap ? k1 : k0;
        const std::string& y = swap ? k0 : k1;
        CCType ty = swap ? diag_type[0] : diag_type[1];
        CCType tx = swap ? diag_type[1] : diag_type[0];
        if (x == "AA" && y == "BC")
            return CaseTag::AaBc;
        if (x == "AA" && y == "CC" && ty == CCType::II)
            return CaseTag::AaCcII;
        if (x == "AB" && y == "CC")
            return CaseTag::AbCc;
        if (x == "CC" && tx == CCType::III && y == "AC")
            return CaseTag::CcIIIAc;
        if (x == "CC" && tx == CCType::III && y == "BC")
            return CaseTag::CcIIIBc;
        if (x == "CC" && y == "CC" && tx == CCType::III && ty == CCType::IV)
            return CaseTag::CcIIICcIV;
        if (x == "CC" && y == "CC" && tx == CCType::V && ty == CCType::I)
            return CaseTag::CcVCcI;
    }
    if (all == "ABCC" && k0 != "AB" && k1 != "AB")
        return CaseTag::AcBc;
    return std::nullopt;
}

} // namespace

NonSimplicial3Face tag_face(const EdgeConePair& e, std::vector<int> rays)
{
    NonSimplicial3Face out;
    std::sort(rays.begin(), rays.end());
    out.rays = rays;
    for (size_t x = 0; x < rays.size(); ++x)
        for (size_t y = x + 1; y < rays.size(); ++y) {
            std::vector<int> s{rays[x], rays[y]};
            if (!spans_face(e, s))
                out.diagonals.emplace_back(rays[x], rays[y]);
        }
    if (rays.size() != 4 || out.diagonals.size() != 2)
        return out;
    auto local = [&](int r) { return static_cast<int>(std::find(rays.begin(), rays.end(), r) - rays.begin()); };
    std::vector<std::pair<int, int>> diag;
    for (auto [p, q] : out.diagonals)
        diag.emplace_back(local(p), local(q));

    for (int mirror = 0; mirror < 2; ++mirror) {
        std::vector<Role> roles;
        for (int r : rays) {
            IndependentSet s = e.sets[r].base;
            char k = letter(s.kind());
            if (mirror) {
                std::swap(s.left, s.right);
                k = k == 'A' ? 'B' : k == 'B' ? 'A' : 'C';
            }
            roles.push_back({k, s});
        }
        std::vector<CCType> types;
        for (auto [p, q] : diag)
            types.push_back(roles[p].kind == 'C' && roles[q].kind == 'C' ? cc_type_of(roles[p].set, roles[q].set)
                                                                          : CCType::NotApplicable);
        if (auto t = match(roles, diag, types)) {
            out.tag = *t;
            out.mirrored = mirror == 1;
            return out;
        }
    }
    return out;
}

bool whole_cone_is_quadrilateral(const EdgeConePair& e)
{
    return e.primal_cone.dim() == 3 && e.ray_count() == 4;
}

std::vector<NonSimplicial3Face> nonsimplicial_three_faces(const EdgeConePair& e)
{
    std::vector<NonSimplicial3Face> out;
    for (const FaceDescriptor& f : face_lattice(e.primal_cone, 3)) {
        if (f.dim != 3 || f.rays.size() < 4)
            continue;
        if (f.dim == e.primal_cone.dim())
            continue;
        out.push_back(tag_face(e, f.rays));
    }
    std::vector<std::vector<int>> graph_route = nonsimplicial_three_faces_by_graph(e);
    std::vector<std::vector<int>> oracle_route;
    for (const NonSimplicial3Face& f : out)
        oracle_route.push_back(f.rays);
    if (graph_route != oracle_route)
        throw InternalError("non-simplicial 3-faces from subgraphs differ from the face lattice");
    return out;
}

std::vector<std::vector<int>> nonsimplicial_three_faces_by_graph(const EdgeConePair& e)
{
    std::set<std::vector<int>> found;
    for (int i = 0; i < e.ray_count(); ++i)
        for (int j = i + 1; j < e.ray_count(); ++j) {
            std::vector<int> s{i, j};
            FaceSpan f = face_span(e, s);
            if (f.dim == 3 && f.rays.size() >= 4 && f.dim < e.primal_cone.dim())
                found.insert(f.rays);
        }
    return {found.begin(), found.end()};
}

SmoothnessReport smoothness_codim2_report(const Cone& c, const QuotientContext& ctx)
{
    SmoothnessReport out;
    for (const FaceDescriptor& f : face_lattice(c, 2)) {
        if (f.dim != 2)
            continue;
        std::vector<NVector> rays;
        for (int r : f.rays)
            rays.emplace_back(ctx, ctx.expand_n(c.rays()[r]));
        TwoFaceCheck check{f.rays, f.rays.size() == 2 && is_smooth_ray_set(rays, ctx)};
        out.smooth = out.smooth && check.smooth;
        out.faces.push_back(std::move(check));
    }
    return out;
}

SmoothnessReport smoothness_codim2_report(const EdgeConePair& e)
{
    return smoothness_codim2_report(e.primal_cone, e.ctx);
}

} // namespace edgecone
