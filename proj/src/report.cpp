#include "edgecone/report.hpp"

#include "edgecone/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace edgecone {

namespace {

Json ints(std::span<const Integer> v)
{
    Json out = Json::array();
    for (const Integer& x : v) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

Json rationals(std::span<const Rational> v)
{
    Json out = Json::array();
    for (const Rational& x : v)
        out.push_back(x.get_str());
    return out;
}

Json members(VertexSet s)
{
    return Json(s.members());
}

std::string kind_name(SetKind k)
{
    switch (k) {
    case SetKind::OneSidedLeft:
        return "one-sided U1";
    case SetKind::OneSidedRight:
        return "one-sided U2";
    case SetKind::TwoSided:
        break;
    }
    return "two-sided";
}

Json sources(const EdgeConePair& e, const std::vector<int>& rays)
{
    Json out = Json::array();
    for (int r : rays)
        out.push_back(format_independent_set(e.sets[r].base));
    return out;
}

Json face_json(const EdgeConePair& e, const NonSimplicial3Face& f)
{
    Json diag = Json::array();
    for (auto [a, b] : f.diagonals)
        diag.push_back({a, b});
    return Json{{"rays", f.rays}, {"sources", sources(e, f.rays)}, {"case", to_string(f.tag)},
                {"mirrored", f.mirrored}, {"diagonals", diag}};
}

} // namespace

Json info_report(const EdgeConePair& e)
{
    Json rays = Json::array();
    for (int i = 0; i < e.ray_count(); ++i)
        rays.push_back({{"index", i},
                        {"source", format_independent_set(e.sets[i].base)},
                        {"kind", kind_name(e.sets[i].kind())},
                        {"ray", ints(e.rays[i].coords())}});
    return Json{{"command", "info"},
                {"m", e.graph.m()},
                {"n", e.graph.n()},
                {"edges", e.graph.edges().size()},
                {"dual_dim", e.dual_cone.dim()},
                {"ray_count", e.ray_count()},
                {"rays", rays}};
}

Json faces_report(const EdgeConePair& e, int dim)
{
    if (dim != 2 && dim != 3)
        throw PreconditionError("face dimension must be 2 or 3");
    Json faces = Json::array();
    for (const FaceDescriptor& f : face_lattice(e.primal_cone, dim)) {
        if (f.dim != dim)
            continue;
        Json j{{"rays", f.rays}, {"sources", sources(e, f.rays)},
               {"simplicial", static_cast<int>(f.rays.size()) == dim}};
        if (dim == 2) {
            std::vector<NVector> rs;
            for (int r : f.rays)
                rs.push_back(e.rays[r]);
            j["smooth"] = f.rays.size() == 2 && is_smooth_ray_set(rs, e.ctx);
        }
        faces.push_back(std::move(j));
    }
    return Json{{"command", "faces"}, {"dim", dim}, {"count", faces.size()}, {"faces", faces}};
}

Json pairs_report(const EdgeConePair& e)
{
    Json pairs = Json::array();
    int two = 0;
    for (int i = 0; i < e.ray_count(); ++i)
        for (int j = i + 1; j < e.ray_count(); ++j) {
            PairClass p = classify_pair(e, i, j);
            two += p.is_two_face;
            pairs.push_back({{"first", i},
                             {"second", j},
                             {"sources", sources(e, {i, j})},
                             {"shape", to_string(p.shape)},
                             {"cc_type", to_string(p.cc_type)},
                             {"two_face", p.is_two_face}});
        }
    return Json{{"command", "pairs"}, {"count", pairs.size()}, {"two_faces", two}, {"pairs", pairs}};
}

Json t1_report(const Skeleton& s, std::span<const Integer> degree)
{
    Crosscut q = crosscut(s, degree);
    T1Result t = t1_dim(q);
    int lattice = 0;
    for (const CrosscutVertex& v : q.vertices)
        lattice += v.lattice;
    return Json{{"command", "t1"},
                {"degree", ints(q.degree)},
                {"heights", ints(q.heights)},
                {"compact_vertices", q.vertices.size()},
                {"lattice_vertices", lattice},
                {"compact_edges", t.compact_edges},
                {"compact_two_faces", t.compact_two_faces},
                {"v_dim", t.v_dim},
                {"constrained_dim", t.constrained_dim},
                {"t1_dim", t.t1_dim}};
}

Json crosscut_report(const Crosscut& q)
{
    Json vertices = Json::array();
    for (const CrosscutVertex& v : q.vertices)
        vertices.push_back({{"ray", v.ray},
                            {"height", v.height.get_si()},
                            {"point", rationals(v.point)},
                            {"lattice", v.lattice}});
    Json edges = Json::array();
    for (const CompactEdge& c : q.edges)
        edges.push_back({{"from", c.from}, {"to", c.to}, {"direction", rationals(c.direction)}});
    Json faces = Json::array();
    for (const SignedCycle& c : q.cycles)
        faces.push_back({{"rays", c.rays}, {"edges", c.edges}, {"signs", c.signs}});
    return Json{{"command", "crosscut"}, {"degree", ints(q.degree)},     {"vertices", vertices},
                {"edges", edges},        {"two_faces", faces},          {"unbounded", q.unbounded}};
}

Json rigidity_report(const EdgeConePair& e, const RigidityVerdict& v)
{
    Json family{{"kind", to_string(v.family.kind)}, {"m", v.family.m}, {"n", v.family.n}};
    if (v.family.kind == FamilyKind::OneTwoSided) {
        family["c1"] = members(v.family.c1);
        family["c2"] = members(v.family.c2);
        family["complete_minus"] = v.family.complete_minus;
    }
    Json t1_by_degree = Json::array();
    if (v.check)
        t1_by_degree.push_back({{"degree", ints(v.check->degree)}, {"t1_dim", v.check->t1_dim}});
    return Json{{"command", "rigidity"},
                {"verdict", to_string(v.verdict)},
                {"reason", v.reason},
                {"family", family},
                {"certificate", v.certificate ? ints(*v.certificate) : Json()},
                {"face", v.face ? face_json(e, *v.face) : Json()},
                {"t1_by_degree", t1_by_degree},
                {"search_bound", v.search_bound}};
}

Json oracle_check_report(const EdgeConePair& e, int limit)
{
    if (e.graph.vertex_count() > limit)
        throw LimitError("graph has " + std::to_string(e.graph.vertex_count()) +
                         " vertices, oracle limit is " + std::to_string(limit));
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, const std::function<std::string()>& run) {
        std::string detail;
        bool ok = true;
        try {
            detail = run();
            ok = detail.empty();
        } catch (const Error& err) {
            ok = false;
            detail = err.what();
        }
        all = all && ok;
        checks.push_back({{"name", name}, {"passed", ok}, {"detail", ok ? "ok" : detail}});
    };

    record("dual dimension", [&]() -> std::string {
        return e.dual_cone.dim() == e.graph.vertex_count() - 1 ? "" : "dimension " + std::to_string(e.dual_cone.dim());
    });
    record("ray bijection", [&]() -> std::string {
        IntMatrix a = dualize(e.dual_cone).rays(), b = e.primal_cone.rays();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b && static_cast<int>(a.size()) == e.ray_count() ? "" : "ray sets differ";
    });
    record("faces up to three rays", [&]() -> std::string {
        int bad = 0, r = e.ray_count();
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j)
                for (int k = j; k < r; ++k) {
                    std::vector<int> s{i, j, k};
                    s.erase(std::unique(s.begin(), s.end()), s.end());
                    FaceDescriptor o = minimal_face_containing(e.primal_cone, s);
                    FaceSpan f = face_span(e, s);
                    bad += o.dim != f.dim || o.rays != f.rays;
                }
        return bad == 0 ? "" : std::to_string(bad) + " mismatches";
    });
    record("pair classification", [&]() -> std::string {
        for (int i = 0; i < e.ray_count(); ++i)
            for (int j = i + 1; j < e.ray_count(); ++j)
                classify_pair(e, i, j);
        return "";
    });
    record("smooth in codimension 2", [&]() -> std::string {
        return smoothness_codim2_report(e).smooth ? "" : "a 2-face is not smooth";
    });
    record("hilbert basis up to 3", [&]() -> std::string {
        auto w = hilbert_basis_witness(dual_generators(e.graph), 3);
        return w ? "witness " + format_vector(*w) : "";
    });
    record("quadrilateral 3-faces", [&]() -> std::string {
        Skeleton s = make_skeleton(e);
        for (const NonSimplicial3Face& f : nonsimplicial_three_faces(e)) {
            if (f.rays.size() != 4 || f.tag == CaseTag::Unclassified)
                return "face with " + std::to_string(f.rays.size()) + " rays, case " + to_string(f.tag);
            Certificate c = nonrigidity_certificate(e, s, f);
            if (!verify_certificate(e, s, c))
                return "certificate " + format_vector(c.degree) + " does not verify";
        }
        return "";
    });
    return Json{{"command", "oracle-check"}, {"passed", all}, {"checks", checks}};
}

std::string export_cone(const EdgeConePair& e)
{
    return cone_to_json(e.ctx.rank(), e.primal_cone.rays());
}

std::string crosscut_dot(const Crosscut& q)
{
    std::ostringstream out;
    out << "graph crosscut {\n  node [shape=circle];\n";
    for (const CrosscutVertex& v : q.vertices) {
        out << "  v" << v.ray << " [label=\"" << v.ray << "\"";
        if (v.lattice)
            out << ", style=filled, fillcolor=black, fontcolor=white";
        out << "];\n";
    }
    for (const CompactEdge& c : q.edges)
        out << "  v" << c.from << " -- v" << c.to << ";\n";
    for (size_t i = 0; i < q.cycles.size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n    label=\"face " << i << "\";\n   ";
        for (int r : q.cycles[i].rays)
            out << " v" << r << ";";
        out << "\n  }\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

using Point = std::pair<double, double>;

Rational rdot(const RatVector& a, const RatVector& b)
{
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RatVector minus(const RatVector& a, const RatVector& b)
{
    RatVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

// exact orthogonal frame when the points span at most a plane, principal axes otherwise
std::vector<Point> planar(const std::vector<RatVector>& pts)
{
    std::vector<Point> out(pts.size(), {0.0, 0.0});
    if (pts.empty())
        return out;
    std::vector<RatVector> basis;
    for (const RatVector& p : pts) {
        RatVector v = minus(p, pts[0]);
        for (const RatVector& b : basis) {
            Rational c = rdot(v, b) / rdot(b, b);
            for (size_t i = 0; i < v.size(); ++i)
                v[i] -= c * b[i];
        }
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; }))
            basis.push_back(v);
    }
    if (basis.size() <= 2) {
        for (size_t k = 0; k < pts.size(); ++k) {
            RatVector v = minus(pts[k], pts[0]);
            double xy[2] = {0.0, 0.0};
            for (size_t b = 0; b < basis.size(); ++b) {
                Rational norm2 = rdot(basis[b], basis[b]);
                xy[b] = Rational(rdot(v, basis[b]) / norm2).get_d() * std::sqrt(norm2.get_d());
            }
            out[k] = {xy[0], xy[1]};
        }
        return out;
    }
    size_t d = pts[0].size();
    RatVector mean(d, Rational(0));
    for (const RatVector& p : pts)
        for (size_t i = 0; i < d; ++i)
            mean[i] += p[i] / static_cast<long>(pts.size());
    Eigen::MatrixXd cov(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            Rational c = 0;
            for (const RatVector& p : pts)
                c += (p[i] - mean[i]) * (p[j] - mean[j]);
            cov(i, j) = c.get_d();
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    Eigen::MatrixXd axes(d, 2);
    for (int a = 0; a < 2; ++a) {
        Eigen::VectorXd v = solver.eigenvectors().col(d - 1 - a);
        Eigen::Index at;
        v.cwiseAbs().maxCoeff(&at);
        axes.col(a) = v(at) < 0 ? Eigen::VectorXd(-v) : v;
    }
    for (size_t k = 0; k < pts.size(); ++k) {
        Eigen::VectorXd p(d);
        for (size_t i = 0; i < d; ++i)
            p(i) = Rational(pts[k][i] - mean[i]).get_d();
        out[k] = {p.dot(axes.col(0)), p.dot(axes.col(1))};
    }
    return out;
}

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
    return buf;
}

} // namespace

std::string crosscut_svg(const Crosscut& q)
{
    const double size = 400, margin = 30;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (q.vertices.empty()) {
        out << "<text x=\"" << size / 2 << "\" y=\"" << size / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\">empty compact part</text>\n</svg>\n";
        return out.str();
    }
    std::vector<RatVector> pts;
    std::map<int, size_t> at;
    for (const CrosscutVertex& v : q.vertices) {
        at[v.ray] = pts.size();
        pts.push_back(v.point);
    }
    std::vector<Point> xy = planar(pts);
    double lo_x = xy[0].first, hi_x = lo_x, lo_y = xy[0].second, hi_y = lo_y;
    for (auto [x, y] : xy) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    double scale = (size - 2 * margin) / span;
    auto sx = [&](double x) { return num(margin + (x - lo_x) * scale + ((size - 2 * margin) - (hi_x - lo_x) * scale) / 2); };
    auto sy = [&](double y) { return num(size - margin - (y - lo_y) * scale - ((size - 2 * margin) - (hi_y - lo_y) * scale) / 2); };

    for (size_t f = 0; f < q.cycles.size(); ++f) {
        const SignedCycle& c = q.cycles[f];
        std::vector<int> order;
        for (size_t i = 0; i < c.edges.size(); ++i) {
            const CompactEdge& e = q.edges[c.edges[i]];
            order.push_back(c.signs[i] > 0 ? e.from : e.to);
        }
        out << "<polygon points=\"";
        for (size_t i = 0; i < order.size(); ++i) {
            auto [x, y] = xy[at[order[i]]];
            out << (i ? " " : "") << sx(x) << "," << sy(y);
        }
        out << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    for (const CompactEdge& e : q.edges) {
        auto [x1, y1] = xy[at[e.from]];
        auto [x2, y2] = xy[at[e.to]];
        out << "<line x1=\"" << sx(x1) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(x2) << "\" y2=\"" << sy(y2)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (const CrosscutVertex& v : q.vertices) {
        auto [x, y] = xy[at[v.ray]];
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"6\" stroke=\"black\" stroke-width=\"2\" fill=\""
            << (v.lattice ? "black" : "white") << "\"/>\n";
        out << "<text x=\"" << sx(x + 10 / scale) << "\" y=\"" << sy(y + 10 / scale)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << v.ray << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace {

std::string cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

} // namespace

std::string render_table(const Json& report)
{
    std::ostringstream out;
    size_t width = 0;
    for (auto it = report.begin(); it != report.end(); ++it)
        width = std::max(width, it.key().size());
    for (auto it = report.begin(); it != report.end(); ++it) {
        const Json& v = it.value();
        bool rows = v.is_array() && !v.empty() && v[0].is_object();
        if (!rows) {
            out << it.key() << std::string(width - it.key().size() + 2, ' ') << cell(v) << "\n";
            continue;
        }
        std::vector<std::string> cols;
        for (auto c = v[0].begin(); c != v[0].end(); ++c)
            cols.push_back(c.key());
        std::vector<size_t> w(cols.size());
        for (size_t c = 0; c < cols.size(); ++c) {
            w[c] = cols[c].size();
            for (const Json& row : v)
                w[c] = std::max(w[c], cell(row.value(cols[c], Json())).size());
        }
        out << "\n" << it.key() << ":\n";
        for (size_t c = 0; c < cols.size(); ++c)
            out << "  " << cols[c] << std::string(w[c] - cols[c].size(), ' ');
        out << "\n";
        for (const Json& row : v) {
            for (size_t c = 0; c < cols.size(); ++c) {
                std::string s = cell(row.value(cols[c], Json()));
                out << "  " << s << std::string(w[c] - s.size(), ' ');
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace edgecone
