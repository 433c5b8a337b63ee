#include "support.hpp"

#include "edgecone/error.hpp"
#include "edgecone/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace testing;

namespace {

IntMatrix dual_gens_full(const BipartiteGraph& g)
{
    IntMatrix out;
    for (const Edge& e : g.edges()) {
        IntVector v(g.vertex_count(), Integer(0));
        v[e.left - 1] = 1;
        v[e.right - 1] = 1;
        out.push_back(v);
    }
    return out;
}

IntMatrix dual_gens_reduced(const BipartiteGraph& g)
{
    IntMatrix out;
    for (const IntVector& v : dual_gens_full(g))
        out.push_back(g.context().reduce_m(v));
    return out;
}

std::set<IntVector> as_set(const IntMatrix& m)
{
    return std::set<IntVector>(m.begin(), m.end());
}

IntMatrix primal_canonical(const BipartiteGraph& g, const Cone& primal)
{
    IntMatrix out;
    for (const IntVector& r : primal.rays())
        out.push_back(g.context().expand_n(r));
    return out;
}

std::vector<std::vector<int>> faces_of_dim(const std::vector<FaceDescriptor>& fl, int d)
{
    std::vector<std::vector<int>> out;
    for (const auto& f : fl)
        if (f.dim == d)
            out.push_back(f.rays);
    return out;
}

} // namespace

TEST_CASE("cone from generators")
{
    Cone k = Cone::from_generators(dual_gens_full(kucuk()));
    CHECK(k.dim() == 3);
    CHECK(k.rays() == im({{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));

    Cone id = Cone::from_generators(im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.rays() == im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.dim() == 3);

    Cone k23 = Cone::from_generators(dual_gens_full(complete_bipartite(2, 3)));
    CHECK(k23.rays().size() == 6);
    CHECK(k23.dim() == 4);

    Cone dup = Cone::from_generators(im({{1, 0}, {2, 0}, {1, 1}, {3, 1}, {0, 1}}));
    CHECK(dup.rays() == im({{1, 0}, {0, 1}}));

    CHECK_THROWS_AS(Cone::from_generators({}), PreconditionError);
    CHECK_THROWS_AS(Cone::from_generators(im({{1, 0}, {-1, 0}})), PreconditionError);
    CHECK_THROWS_AS(Cone::from_generators(im({{0, 0}})), PreconditionError);
}

TEST_CASE("dualize")
{
    auto k = kucuk();
    Cone primal = dualize(Cone::from_generators(dual_gens_reduced(k)));
    CHECK(as_set(primal_canonical(k, primal)) == as_set(im({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 0}})));

    Cone orthant = Cone::from_generators(im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(as_set(dualize(orthant).rays()) == as_set(orthant.rays()));

    auto k33 = complete_bipartite(3, 3);
    Cone p33 = dualize(Cone::from_generators(dual_gens_reduced(k33)));
    CHECK(as_set(primal_canonical(k33, p33)) ==
          as_set(im({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 1, 0}, {1, 1, 1, -1, -1, 0}})));
}

TEST_CASE("face lattice")
{
    auto k22 = complete_bipartite(2, 2);
    Cone p = dualize(Cone::from_generators(dual_gens_reduced(k22)));
    IntMatrix canon = primal_canonical(k22, p);
    auto idx = [&](std::initializer_list<long> v) {
        return static_cast<int>(std::find(canon.begin(), canon.end(), iv(v)) - canon.begin());
    };
    int e1 = idx({1, 0, 0, 0}), e2 = idx({0, 1, 0, 0}), f1 = idx({0, 0, 1, 0}), f2 = idx({1, 1, -1, 0});
    auto fl = face_lattice(p, 2);
    CHECK(fl[0].dim == 0);
    CHECK(fl[0].rays.empty());
    auto two = faces_of_dim(fl, 2);
    CHECK(two.size() == 4);
    auto has = [&](int a, int b) {
        std::vector<int> s{std::min(a, b), std::max(a, b)};
        return std::find(two.begin(), two.end(), s) != two.end();
    };
    CHECK_FALSE(has(e1, e2));
    CHECK_FALSE(has(f1, f2));
    CHECK(has(e1, f1));
    CHECK(has(e1, f2));
    CHECK(has(e2, f1));
    CHECK(has(e2, f2));

    Cone simplex = Cone::from_generators(im({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 1}}));
    auto sf = face_lattice(simplex, 4);
    CHECK(sf.size() == 16);
}

TEST_CASE("faces of the graph with two two-sided rays")
{
    auto g = two_two_sided_example();
    Cone p = dualize(Cone::from_generators(dual_gens_reduced(g)));
    IntMatrix canon = primal_canonical(g, p);
    REQUIRE(canon.size() == 8);
    auto idx = [&](const IntVector& v) {
        return static_cast<int>(std::find(canon.begin(), canon.end(), v) - canon.begin());
    };
    auto unit = [&](int i) {
        IntVector v(8, Integer(0));
        v[i - 1] = 1;
        return canonicalize(v, g.context()).coords();
    };
    int e3 = idx(unit(3)), e4 = idx(unit(4)), f1 = idx(unit(5)), f2 = idx(unit(6));
    // sum over U1 minus C1 of e_i minus sum over C2 of f_j
    int a1 = idx(canonicalize(iv({0, 1, 1, 1, -1, -1, -1, 0}), g.context()).coords());
    int a2 = idx(canonicalize(iv({1, 0, 1, 1, -1, -1, 0, -1}), g.context()).coords());
    REQUIRE(a1 < 8);
    REQUIRE(a2 < 8);

    auto two = faces_of_dim(face_lattice(p, 2), 2);
    CHECK(two.size() == 27);
    std::vector<int> e34{std::min(e3, e4), std::max(e3, e4)};
    CHECK(std::find(two.begin(), two.end(), e34) == two.end());

    std::vector<int> q{e3, e4};
    FaceDescriptor f = minimal_face_containing(p, q);
    CHECK(f.dim == 5);
    std::vector<int> expected{e3, e4, f1, f2, a1, a2};
    std::sort(expected.begin(), expected.end());
    CHECK(f.rays == expected);

    std::vector<int> aa{a1, a2};
    CHECK(minimal_face_containing(p, aa).dim == 2);
    CHECK(minimal_face_containing(p, aa).rays.size() == 2);
    std::vector<int> single{e3};
    CHECK(minimal_face_containing(p, single).rays == single);
}

TEST_CASE("hilbert basis check")
{
    CHECK(hilbert_basis_check(dual_gens_full(kucuk()), 3));
    CHECK(hilbert_basis_check(im({{1, 1}}), 5));
    auto w = hilbert_basis_witness(im({{1, 0}, {1, 2}}), 3);
    REQUIRE(w.has_value());
    CHECK(*w == iv({1, 1}));
}

TEST_CASE("cone JSON")
{
    auto in = parse_cone_json(R"({"ambient_dim": 2, "rays": [[1, 0], [1, 2]]})");
    CHECK(in.ambient_dim == 2);
    CHECK(in.rays == im({{1, 0}, {1, 2}}));
    CHECK(cone_to_json(2, in.rays) == R"({"ambient_dim":2,"rays":[[1,0],[1,2]]})");
    CHECK_THROWS_AS(parse_cone_json(R"({"ambient_dim": 2, "rays": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_cone_json("[]"), ParseError);
}

namespace {

IntMatrix random_pointed_generators(std::mt19937_64& rng, int d)
{
    IntMatrix gens;
    int count = uniform(rng, 1, 8);
    while (static_cast<int>(gens.size()) < count) {
        IntVector v = random_vector(rng, d, 3);
        v[d - 1] = uniform(rng, 1, 3);
        gens.push_back(v);
    }
    return gens;
}

} // namespace

TEST_CASE("property: dualizing twice gives back the cone")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        int d = uniform(rng, 1, 6);
        Cone c = Cone::from_generators(random_pointed_generators(rng, d));
        Cone dd = dualize(dualize(c));
        CHECK(as_set(dd.rays()) == as_set(c.rays()));
        CHECK(dualize(c).rays().size() == c.facet_normals().size());
    }
}

TEST_CASE("property: extremal rays are not generated by the others")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        int d = uniform(rng, 2, 5);
        IntMatrix gens = random_pointed_generators(rng, d);
        Cone c = Cone::from_generators(gens);
        for (size_t i = 0; i < c.rays().size(); ++i) {
            IntMatrix others;
            for (size_t j = 0; j < c.rays().size(); ++j)
                if (j != i)
                    others.push_back(c.rays()[j]);
            CHECK_FALSE(in_cone_generated_by(c.rays()[i], others));
        }
        for (const IntVector& g : gens)
            CHECK(c.contains(g));
        for (const IntVector& f : c.facet_normals())
            for (const IntVector& r : c.rays())
                CHECK(dot(f, r) >= 0);
    }
}

TEST_CASE("property: face lattice is graded and closed under intersection")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        int d = uniform(rng, 2, 5);
        Cone c = Cone::from_generators(random_pointed_generators(rng, d));
        auto fl = face_lattice(c, c.dim());
        std::set<std::vector<int>> all;
        for (const auto& f : fl) {
            all.insert(f.rays);
            IntMatrix coords;
            for (int r : f.rays)
                coords.push_back(c.rays()[r]);
            CHECK(rank(coords) == f.dim);
        }
        CHECK(faces_of_dim(fl, c.dim() - 1).size() == c.facet_normals().size());
        CHECK(faces_of_dim(fl, c.dim()).size() == 1);
        for (const auto& f : fl)
            for (const auto& g : fl) {
                std::vector<int> x;
                std::set_intersection(f.rays.begin(), f.rays.end(), g.rays.begin(), g.rays.end(),
                                      std::back_inserter(x));
                CHECK(all.count(x) == 1);
                if (f.dim + 1 == g.dim)
                    CHECK(f.rays.size() < g.rays.size());
            }
    }
}

TEST_CASE("property: dual edge cone dimension counts components")
{
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(rng, uniform(rng, 1, 5), uniform(rng, 1, 5), 0.35, false);
        if (g.edges().empty())
            continue;
        Cone c = Cone::from_generators(dual_gens_full(g));
        CHECK(c.dim() == g.vertex_count() - g.component_count());
    }
}
