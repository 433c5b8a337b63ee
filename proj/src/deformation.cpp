#include "edgecone/deformation.hpp"

#include "edgecone/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace edgecone {

namespace {

std::string format_rays(const std::vector<int>& rays)
{
    std::string out = "[";
    for (size_t i = 0; i < rays.size(); ++i)
        out += (i ? "," : "") + std::to_string(rays[i]);
    return out + "]";
}

// cyclic order: start at the smallest ray and step to its smaller neighbour first
void walk_polygon(Skeleton& s, const std::vector<int>& rays, const std::map<std::pair<int, int>, int>& edge_of)
{
    std::map<int, std::vector<int>> adj;
    std::vector<int> edges;
    for (size_t x = 0; x < rays.size(); ++x)
        for (size_t y = x + 1; y < rays.size(); ++y) {
            auto it = edge_of.find({rays[x], rays[y]});
            if (it == edge_of.end())
                continue;
            adj[rays[x]].push_back(rays[y]);
            adj[rays[y]].push_back(rays[x]);
        }
    for (int r : rays)
        if (adj[r].size() != 2)
            throw InternalError("3-face " + format_rays(rays) + " is not a polygon");
    std::vector<int> order{rays.front()};
    int prev = rays.front();
    int cur = std::min(adj[prev][0], adj[prev][1]);
    while (cur != rays.front()) {
        order.push_back(cur);
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (order.size() != rays.size())
        throw InternalError("3-face " + format_rays(rays) + " is not a single cycle");
    for (size_t i = 0; i < order.size(); ++i) {
        int a = order[i], b = order[(i + 1) % order.size()];
        edges.push_back(edge_of.at({std::min(a, b), std::max(a, b)}));
    }
    s.polygon_rays.push_back(std::move(order));
    s.polygon_edges.push_back(std::move(edges));
}

} // namespace

Skeleton make_skeleton(const Cone& c, const QuotientContext& ctx)
{
    if (c.ambient_dim() != ctx.rank())
        throw PreconditionError("cone dimension does not match the lattice");
    Skeleton s{c, ctx, {}, {}, {}, {}, false};
    std::map<std::pair<int, int>, int> edge_of;
    std::vector<FaceDescriptor> lattice = face_lattice(c, 3);
    for (const FaceDescriptor& f : lattice) {
        if (f.dim != 2)
            continue;
        bool smooth = f.rays.size() == 2;
        if (smooth) {
            std::vector<NVector> rays;
            for (int r : f.rays)
                rays.emplace_back(ctx, ctx.expand_n(c.rays()[r]));
            smooth = is_smooth_ray_set(rays, ctx);
        }
        if (!smooth)
            throw PreconditionError("cone is not smooth in codimension 2: 2-face " + format_rays(f.rays));
        edge_of[{f.rays[0], f.rays[1]}] = static_cast<int>(s.two_faces.size());
        s.two_faces.emplace_back(f.rays[0], f.rays[1]);
    }
    for (const FaceDescriptor& f : lattice) {
        if (f.dim != 3)
            continue;
        s.three_faces.push_back(f.rays);
        s.has_quadrilaterals = s.has_quadrilaterals || f.rays.size() > 3;
        walk_polygon(s, f.rays, edge_of);
    }
    return s;
}

Skeleton make_skeleton(const EdgeConePair& e)
{
    return make_skeleton(e.primal_cone, e.ctx);
}

namespace {

IntVector reduced_degree(const Skeleton& s, std::span<const Integer> degree)
{
    if (static_cast<int>(degree.size()) != s.ctx.ambient_dim())
        throw PreconditionError("degree has " + std::to_string(degree.size()) + " coordinates, expected " +
                                std::to_string(s.ctx.ambient_dim()));
    MVector checked(s.ctx, IntVector(degree.begin(), degree.end()));
    return s.ctx.reduce_m(checked.coords());
}

} // namespace

Crosscut crosscut(const Skeleton& s, std::span<const Integer> degree)
{
    IntVector r = reduced_degree(s, degree);
    Crosscut q;
    q.degree.assign(degree.begin(), degree.end());
    const IntMatrix& rays = s.cone.rays();
    std::vector<RatVector> points(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
        Integer h = dot(r, rays[i]);
        q.heights.push_back(h);
        if (h <= 0) {
            q.unbounded.push_back(static_cast<int>(i));
            continue;
        }
        RatVector p;
        for (const Integer& x : rays[i])
            p.push_back(Rational(x, h));
        for (Rational& x : p)
            x.canonicalize();
        points[i] = p;
        q.vertices.push_back({static_cast<int>(i), h, p, h == 1});
    }
    std::vector<int> edge_at(s.two_faces.size(), -1);
    for (size_t k = 0; k < s.two_faces.size(); ++k) {
        auto [a, b] = s.two_faces[k];
        if (q.heights[a] <= 0 || q.heights[b] <= 0)
            continue;
        RatVector d(points[a].size());
        for (size_t i = 0; i < d.size(); ++i)
            d[i] = points[b][i] - points[a][i];
        edge_at[k] = static_cast<int>(q.edges.size());
        q.edges.push_back({a, b, std::move(d)});
    }
    for (size_t f = 0; f < s.three_faces.size(); ++f) {
        const std::vector<int>& order = s.polygon_rays[f];
        if (!std::all_of(order.begin(), order.end(), [&](int x) { return q.heights[x] > 0; }))
            continue;
        SignedCycle c;
        c.rays = s.three_faces[f];
        for (size_t i = 0; i < order.size(); ++i) {
            int k = s.polygon_edges[f][i];
            c.edges.push_back(edge_at[k]);
            c.signs.push_back(s.two_faces[k].first == order[i] ? 1 : -1);
        }
        q.cycles.push_back(std::move(c));
    }
    for (const SignedCycle& c : q.cycles)
        for (const Rational& x : signed_sum(q, c))
            if (x != 0)
                throw InternalError("signed edges of a compact 2-face do not close up");
    return q;
}

RatVector signed_sum(const Crosscut& q, const SignedCycle& c)
{
    RatVector out(q.edges.empty() ? 0 : q.edges[0].direction.size(), Rational(0));
    for (size_t i = 0; i < c.edges.size(); ++i)
        for (size_t k = 0; k < out.size(); ++k)
            out[k] += c.signs[i] * q.edges[c.edges[i]].direction[k];
    return out;
}

T1Result t1_dim(const Crosscut& q)
{
    T1Result out;
    out.degree = q.degree;
    int e = static_cast<int>(q.edges.size());
    out.compact_edges = e;
    out.compact_two_faces = static_cast<int>(q.cycles.size());
    if (e == 0)
        return out;
    RatMatrix rows;
    for (const SignedCycle& c : q.cycles) {
        size_t dim = q.edges[0].direction.size();
        for (size_t k = 0; k < dim; ++k) {
            RatVector row(e, Rational(0));
            for (size_t i = 0; i < c.edges.size(); ++i)
                row[c.edges[i]] += c.signs[i] * q.edges[c.edges[i]].direction[k];
            rows.push_back(std::move(row));
        }
    }
    out.v_dim = e - rank(rows);
    for (const CrosscutVertex& v : q.vertices) {
        if (v.lattice)
            continue;
        int first = -1;
        for (int i = 0; i < e; ++i) {
            if (q.edges[i].from != v.ray && q.edges[i].to != v.ray)
                continue;
            if (first < 0) {
                first = i;
                continue;
            }
            RatVector row(e, Rational(0));
            row[first] = 1;
            row[i] = -1;
            rows.push_back(std::move(row));
        }
    }
    out.constrained_dim = e - rank(rows);
    out.t1_dim = std::max(out.constrained_dim - 1, 0);
    return out;
}

T1Result t1_dim(const Skeleton& s, std::span<const Integer> degree)
{
    return t1_dim(crosscut(s, degree));
}

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int integer_rank(std::vector<std::vector<Wide>> rows, int cols)
{
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c] == 0)
                continue;
            Wide p = rows[r][c], q = rows[i][c], g = 0;
            for (int k = 0; k < cols; ++k) {
                rows[i][k] = rows[i][k] * p - rows[r][k] * q;
                g = wide_gcd(g, rows[i][k]);
            }
            if (g > 1)
                for (Wide& x : rows[i])
                    x /= g;
        }
        ++r;
    }
    return r;
}

} // namespace

std::optional<int> t1_fast(const Skeleton& s, std::span<const long> heights)
{
    std::vector<int> parent(s.two_faces.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    int edges = 0;
    std::vector<int> first_at(heights.size(), -1);
    for (size_t k = 0; k < s.two_faces.size(); ++k) {
        auto [a, b] = s.two_faces[k];
        if (heights[a] <= 0 || heights[b] <= 0)
            continue;
        ++edges;
        for (int v : {a, b}) {
            if (heights[v] == 1)
                continue;
            if (first_at[v] < 0)
                first_at[v] = static_cast<int>(k);
            else
                unite(first_at[v], static_cast<int>(k));
        }
    }
    if (edges == 0)
        return 0;
    std::vector<size_t> polygons;
    for (size_t f = 0; f < s.three_faces.size(); ++f) {
        const std::vector<int>& rays = s.three_faces[f];
        if (!std::all_of(rays.begin(), rays.end(), [&](int x) { return heights[x] > 0; }))
            continue;
        if (rays.size() > 3) {
            polygons.push_back(f);
            continue;
        }
        unite(s.polygon_edges[f][0], s.polygon_edges[f][1]);
        unite(s.polygon_edges[f][0], s.polygon_edges[f][2]);
    }
    std::vector<int> class_of(s.two_faces.size(), -1);
    int classes = 0;
    for (size_t k = 0; k < s.two_faces.size(); ++k) {
        auto [a, b] = s.two_faces[k];
        if (heights[a] > 0 && heights[b] > 0 && find(static_cast<int>(k)) == static_cast<int>(k))
            class_of[k] = classes++;
    }
    if (polygons.empty())
        return classes - 1;

    // cycle equations of larger polygons, scaled to integers, over the classes
    const IntMatrix& rays = s.cone.rays();
    int dim = s.cone.ambient_dim();
    std::vector<std::vector<Wide>> rows;
    for (size_t f : polygons) {
        const std::vector<int>& order = s.polygon_rays[f];
        Wide scale = 1;
        for (int r : order) {
            scale *= heights[r];
            if (scale > (Wide(1) << 60))
                return std::nullopt;
        }
        for (int c = 0; c < dim; ++c) {
            std::vector<Wide> row(classes, 0);
            for (size_t i = 0; i < order.size(); ++i) {
                int a = order[i], b = order[(i + 1) % order.size()];
                if (!rays[a][c].fits_slong_p() || !rays[b][c].fits_slong_p())
                    return std::nullopt;
                Wide d = Wide(rays[b][c].get_si()) * (scale / heights[b]) -
                         Wide(rays[a][c].get_si()) * (scale / heights[a]);
                row[class_of[find(s.polygon_edges[f][i])]] += d;
            }
            rows.push_back(std::move(row));
        }
    }
    return classes - integer_rank(std::move(rows), classes) - 1;
}

namespace {

struct View {
    VertexSet left;
    VertexSet right;
    std::vector<char> kind;
    std::vector<IndependentSet> sets;
};

View view_of(const EdgeConePair& e, const NonSimplicial3Face& f)
{
    View v{e.graph.left(), e.graph.right(), {}, {}};
    if (f.mirrored)
        std::swap(v.left, v.right);
    for (int r : f.rays) {
        IndependentSet s = e.sets[r].base;
        if (f.mirrored)
            std::swap(s.left, s.right);
        char k = s.left.empty() ? 'B' : s.right.empty() ? 'A' : 'C';
        v.kind.push_back(k);
        v.sets.push_back(s);
    }
    return v;
}

int missing_in(const View& v, int i)
{
    return v.kind[i] == 'A' ? (v.left - v.sets[i].left).min() : (v.right - v.sets[i].right).min();
}

using Candidate = std::vector<int>;

std::vector<Candidate> formula_candidates(const EdgeConePair& e, const NonSimplicial3Face& f)
{
    View v = view_of(e, f);
    const BipartiteGraph& g = e.graph;
    std::vector<Candidate> out;
    auto local = [&](int r) { return static_cast<int>(std::find(f.rays.begin(), f.rays.end(), r) - f.rays.begin()); };
    std::vector<std::pair<int, int>> diag;
    for (auto [p, q] : f.diagonals)
        diag.emplace_back(local(p), local(q));
    auto of_kind = [&](char k) {
        std::vector<int> r;
        for (int i = 0; i < 4; ++i)
            if (v.kind[i] == k)
                r.push_back(i);
        return r;
    };
    auto diag_kinds = [&](const std::pair<int, int>& d) {
        std::string s{v.kind[d.first], v.kind[d.second]};
        std::sort(s.begin(), s.end());
        return s;
    };
    auto add = [&](std::initializer_list<VertexSet> choices) {
        Candidate c;
        for (VertexSet s : choices) {
            if (s.empty())
                return;
            c.push_back(s.min());
        }
        out.push_back(c);
    };
    auto one = [](int x) { return VertexSet::of({x}); };
    auto cc_diag = [&](CCType t) -> std::optional<std::pair<int, int>> {
        for (auto d : diag)
            if (diag_kinds(d) == "CC" && cc_type_of(v.sets[d.first], v.sets[d.second]) == t)
                return d;
        return std::nullopt;
    };

    switch (f.tag) {
    case CaseTag::AaBc: {
        auto as = of_kind('A');
        int b = missing_in(v, of_kind('B')[0]);
        add({one(missing_in(v, as[0])), one(missing_in(v, as[1])), one(b), v.right - one(b)});
        break;
    }
    case CaseTag::AaCcII: {
        auto as = of_kind('A');
        auto cs = of_kind('C');
        add({one(missing_in(v, as[0])), one(missing_in(v, as[1])), v.sets[cs[0]].right, v.sets[cs[1]].right});
        break;
    }
    case CaseTag::AbCc:
        add({one(missing_in(v, of_kind('A')[0])), one(missing_in(v, of_kind('B')[0]))});
        break;
    case CaseTag::CcIIIAc:
        if (auto d = cc_diag(CCType::III)) {
            const IndependentSet &c = v.sets[d->first], &c2 = v.sets[d->second];
            add({one(missing_in(v, of_kind('A')[0])), v.right - (c.right | c2.right)});
        }
        break;
    case CaseTag::CcIIIBc:
        if (auto d = cc_diag(CCType::III)) {
            auto cs = of_kind('C');
            int other = -1;
            for (int i : cs)
                if (i != d->first && i != d->second)
                    other = i;
            int b = missing_in(v, of_kind('B')[0]);
            for (auto [x, y] : {*d, std::pair{d->second, d->first}}) {
                const IndependentSet &c = v.sets[x], &c2 = v.sets[y];
                add({neighbor_set(g, c2.right), neighbor_set(g, c.right), one(b),
                     v.right - v.sets[other].right - one(b)});
            }
        }
        break;
    case CaseTag::CcVCcI:
        if (auto d = cc_diag(CCType::V)) {
            const IndependentSet &c = v.sets[d->first], &c2 = v.sets[d->second];
            add({v.left - (c.left | c2.left), v.right - (c.right | c2.right)});
            add({neighbor_set(g, c2.right), neighbor_set(g, c.left)});
            add({neighbor_set(g, c.right), neighbor_set(g, c2.left)});
        }
        break;
    case CaseTag::AcBc:
    case CaseTag::CcIIICcIV:
    case CaseTag::WholeCone:
    case CaseTag::Unclassified:
        break;
    }
    return out;
}

std::vector<Candidate> search_candidates(const BipartiteGraph& g)
{
    std::vector<Candidate> out;
    for (int a : g.left().members())
        for (int b : g.right().members())
            out.push_back({a, b});
    for (int a : g.left().members())
        for (int a2 : g.left().members())
            for (int b : g.right().members())
                for (int b2 : g.right().members())
                    if (a <= a2 && b <= b2)
                        out.push_back({a, a2, b, b2});
    return out;
}

IntVector degree_of(const BipartiteGraph& g, const Candidate& c)
{
    IntVector r(g.vertex_count(), Integer(0));
    for (int x : c)
        r[x - 1] += 1;
    return r;
}

} // namespace

bool verify_certificate(const EdgeConePair& e, const Skeleton& s, const Certificate& c)
{
    (void)e;
    Crosscut q = crosscut(s, c.degree);
    std::vector<int> compact;
    for (const CrosscutVertex& v : q.vertices) {
        if (!v.lattice)
            return false;
        compact.push_back(v.ray);
    }
    if (compact != c.face.rays)
        return false;
    if (q.cycles.size() != 1 || q.cycles[0].rays != c.face.rays)
        return false;
    return t1_dim(q).t1_dim >= 1;
}

Certificate nonrigidity_certificate(const EdgeConePair& e, const Skeleton& s, const NonSimplicial3Face& f)
{
    if (f.rays.size() != 4)
        throw PreconditionError("a certificate needs a face with four rays");
    const BipartiteGraph& g = e.graph;
    std::vector<SpanningSubgraph> hs;
    for (int r : f.rays)
        hs.push_back(e.subgraphs[r]);
    IntVector val = degree_sequence(intersection_subgraph(hs)).coords();
    IntVector val_reduced = e.ctx.reduce_m(val);

    std::vector<Candidate> formula = formula_candidates(e, f);
    std::vector<Candidate> all = formula;
    for (Candidate& c : search_candidates(g))
        all.push_back(std::move(c));
    for (size_t i = 0; i < all.size(); ++i) {
        IntVector base = degree_of(g, all[i]);
        IntVector reduced = e.ctx.reduce_m(base);
        bool unit = true;
        for (int r : f.rays)
            unit = unit && dot(reduced, s.cone.rays()[r]) == 1;
        if (!unit)
            continue;
        Integer k = 0;
        for (int r = 0; r < e.ray_count(); ++r) {
            if (std::binary_search(f.rays.begin(), f.rays.end(), r))
                continue;
            Integer h = dot(reduced, s.cone.rays()[r]);
            Integer v = dot(val_reduced, s.cone.rays()[r]);
            if (v <= 0)
                throw InternalError("ray outside the face has no positive value on the face degree");
            Integer need;
            mpz_cdiv_q(need.get_mpz_t(), h.get_mpz_t(), v.get_mpz_t());
            k = std::max(k, need);
        }
        Certificate c;
        c.face = f;
        c.base = base;
        c.val = val;
        c.shift = k;
        for (size_t x = 0; x < base.size(); ++x)
            c.degree.push_back(base[x] - k * val[x]);
        c.from_formula = i < formula.size();
        if (!verify_certificate(e, s, c))
            continue;
        c.check = t1_dim(s, c.degree);
        return c;
    }
    throw InternalError("no certificate degree verifies for the face " + format_rays(f.rays));
}

Family classify_family(const BipartiteGraph& g)
{
    Family out;
    out.m = g.m();
    out.n = g.n();
    if (static_cast<int>(g.edges().size()) == g.m() * g.n()) {
        out.kind = FamilyKind::Complete;
        return out;
    }
    std::vector<IndependentSet> two_sided;
    for (const FirstIndependentSet& a : enumerate_first_independent_sets(g))
        if (a.kind() == SetKind::TwoSided)
            two_sided.push_back(a.base);
    if (two_sided.size() == 1) {
        out.kind = FamilyKind::OneTwoSided;
        out.c1 = two_sided[0].left;
        out.c2 = two_sided[0].right;
        out.complete_minus = g == complete_minus(g.m(), g.n(), out.c1, out.c2);
    }
    return out;
}

std::string to_string(FamilyKind k)
{
    switch (k) {
    case FamilyKind::Complete:
        return "Complete";
    case FamilyKind::OneTwoSided:
        return "OneTwoSided";
    case FamilyKind::Other:
        break;
    }
    return "Other";
}

std::vector<VertexSet> twin_classes(const BipartiteGraph& g)
{
    std::map<std::pair<bool, std::uint64_t>, VertexSet> by_neighbors;
    for (int v = 1; v <= g.vertex_count(); ++v)
        by_neighbors[{v > g.m(), g.adjacent(v).bits()}].insert(v);
    std::vector<VertexSet> out;
    for (auto& [key, s] : by_neighbors)
        out.push_back(s);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return out;
}

namespace {

// non-increasing tuples of the given length with entries in [-bound, bound]
void descending_tuples(int len, int bound, int cap, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int x = cap; x >= -bound; --x) {
        cur.push_back(x);
        descending_tuples(len, bound, x, cur, out);
        cur.pop_back();
    }
}

struct SparseRay {
    std::vector<std::pair<int, long>> entries;
};

} // namespace

std::vector<DegreeHit> degree_search(const EdgeConePair& e, const Skeleton& s, int bound, bool use_twins)
{
    if (bound < 1)
        throw PreconditionError("search bound must be at least 1");
    const BipartiteGraph& g = e.graph;
    int nv = g.vertex_count();
    std::vector<VertexSet> classes;
    if (use_twins) {
        classes = twin_classes(g);
    } else {
        for (int v = 1; v <= nv; ++v)
            classes.push_back(VertexSet::of({v}));
    }
    std::vector<std::vector<int>> members;
    std::vector<std::vector<std::vector<long>>> tuples;
    std::vector<int> sign;
    for (VertexSet c : classes) {
        members.push_back(c.members());
        std::vector<long> cur;
        std::vector<std::vector<long>> t;
        descending_tuples(c.size(), bound, bound, cur, t);
        tuples.push_back(std::move(t));
        sign.push_back(c.min() <= g.m() ? 1 : -1);
    }
    std::vector<long> reach(classes.size() + 1, 0);
    for (size_t i = classes.size(); i-- > 0;)
        reach[i] = reach[i + 1] + static_cast<long>(bound) * classes[i].size();

    std::vector<SparseRay> rays;
    for (const NVector& r : e.rays) {
        SparseRay sr;
        for (int i = 0; i < nv; ++i)
            if (r.coords()[i] != 0)
                sr.entries.emplace_back(i, r.coords()[i].get_si());
        rays.push_back(std::move(sr));
    }
    // t1 depends on the clamped heights, plus the exact heights on compact quadrilaterals
    std::vector<const std::vector<int>*> quads;
    for (const std::vector<int>& f : s.three_faces)
        if (f.size() > 3)
            quads.push_back(&f);
    std::unordered_map<std::string, int> memo;
    std::vector<long> degree(nv, 0), heights(rays.size()), key(rays.size());
    std::vector<IntVector> reps;
    std::vector<int> rep_t1;

    auto evaluate = [&]() {
        int positive = 0;
        for (size_t i = 0; i < rays.size(); ++i) {
            long h = 0;
            for (auto [k, x] : rays[i].entries)
                h += x * degree[k];
            heights[i] = h;
            positive += h > 0;
            key[i] = std::clamp(h, 0L, 2L);
        }
        if (positive < 2)
            return;
        for (const std::vector<int>* f : quads)
            if (std::all_of(f->begin(), f->end(), [&](int x) { return heights[x] > 0; }))
                for (int x : *f)
                    key[x] = heights[x];
        std::string k(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(long));
        auto [it, fresh] = memo.try_emplace(std::move(k), 0);
        if (fresh) {
            if (auto fast = t1_fast(s, heights)) {
                it->second = *fast;
            } else {
                IntVector r(degree.begin(), degree.end());
                it->second = t1_dim(s, r).t1_dim;
            }
        }
        if (it->second > 0) {
            reps.emplace_back(degree.begin(), degree.end());
            rep_t1.push_back(it->second);
        }
    };

    std::function<void(size_t, long)> descend = [&](size_t ci, long balance) {
        if (ci == classes.size()) {
            if (balance == 0)
                evaluate();
            return;
        }
        for (const std::vector<long>& t : tuples[ci]) {
            long sum = 0;
            for (size_t j = 0; j < t.size(); ++j) {
                degree[members[ci][j] - 1] = t[j];
                sum += t[j];
            }
            long next = balance + sign[ci] * sum;
            if (std::abs(next) > reach[ci + 1])
                continue;
            descend(ci + 1, next);
        }
    };
    descend(0, 0);

    std::set<std::vector<long>> seen;
    std::vector<DegreeHit> out;
    for (size_t h = 0; h < reps.size(); ++h) {
        std::vector<std::vector<long>> images{std::vector<long>(nv)};
        for (int i = 0; i < nv; ++i)
            images[0][i] = reps[h][i].get_si();
        for (const std::vector<int>& mem : members) {
            std::vector<std::vector<long>> next;
            for (const std::vector<long>& img : images) {
                std::vector<long> vals;
                for (int v : mem)
                    vals.push_back(img[v - 1]);
                std::sort(vals.begin(), vals.end());
                do {
                    std::vector<long> x = img;
                    for (size_t j = 0; j < mem.size(); ++j)
                        x[mem[j] - 1] = vals[j];
                    next.push_back(std::move(x));
                } while (std::next_permutation(vals.begin(), vals.end()));
            }
            images = std::move(next);
        }
        for (const std::vector<long>& img : images)
            if (seen.insert(img).second)
                out.push_back({IntVector(img.begin(), img.end()), rep_t1[h]});
    }
    std::sort(out.begin(), out.end(), [](const DegreeHit& a, const DegreeHit& b) { return a.degree < b.degree; });
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Rigid:
        return "Rigid";
    case Verdict::NotRigid:
        return "NotRigid";
    case Verdict::Unknown:
        break;
    }
    return "Unknown";
}

RigidityVerdict rigidity_verdict(const EdgeConePair& e, int search_bound)
{
    const BipartiteGraph& g = e.graph;
    RigidityVerdict out;
    out.search_bound = search_bound;
    out.family = classify_family(g);
    Skeleton s = make_skeleton(e);

    auto certified = [&](IntVector degree, std::string reason) {
        T1Result check = t1_dim(s, degree);
        if (check.t1_dim < 1)
            throw InternalError("certificate " + format_vector(degree) + " has no deformations");
        out.verdict = Verdict::NotRigid;
        out.reason = std::move(reason);
        out.certificate = std::move(degree);
        out.check = check;
    };

    std::vector<NonSimplicial3Face> faces = nonsimplicial_three_faces(e);
    if (!faces.empty()) {
        Certificate c = nonrigidity_certificate(e, s, faces.front());
        out.face = c.face;
        certified(c.degree, "non-simplicial 3-face " + to_string(c.face.tag));
        return out;
    }
    const Family& fam = out.family;
    if (fam.kind == FamilyKind::Complete) {
        if (g.m() == 2 && g.n() == 2) {
            certified(IntVector{1, 1, 1, 1}, "complete bipartite K_{2,2}: the cone is a quadrilateral");
        } else {
            out.verdict = Verdict::Rigid;
            out.reason = "complete bipartite graph other than K_{2,2}";
        }
        return out;
    }
    if (fam.kind == FamilyKind::OneTwoSided && fam.complete_minus) {
        int c1 = fam.c1.size(), c2 = fam.c2.size();
        bool not_rigid = (c1 == 1 && c2 == g.n() - 2) || (c1 == g.m() - 2 && c2 == 1);
        if (!not_rigid) {
            out.verdict = Verdict::Rigid;
            out.reason = "one two-sided first independent set with |C1|=" + std::to_string(c1) +
                         ", |C2|=" + std::to_string(c2);
            return out;
        }
        std::vector<DegreeHit> hits = degree_search(e, s, search_bound);
        if (!hits.empty()) {
            certified(hits.front().degree, "one two-sided first independent set, certificate found by search");
        } else {
            out.verdict = Verdict::Unknown;
            out.reason = "one two-sided first independent set predicts deformations, none found within the bound";
        }
        return out;
    }
    std::vector<DegreeHit> hits = degree_search(e, s, search_bound);
    if (!hits.empty()) {
        certified(hits.front().degree, "degree search");
    } else {
        out.verdict = Verdict::Unknown;
        out.reason = "no deformation degree within the search bound";
    }
    return out;
}

} // namespace edgecone
