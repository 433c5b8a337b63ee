#include "support.hpp"

#include "edgecone/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace testing;

TEST_CASE("canonicalize")
{
    auto ctx = QuotientContext::bipartite(2, 2);
    CHECK(canonicalize(ctx.w(), ctx).is_zero());
    CHECK(canonicalize(iv({0, 1, -1, 0}), ctx).coords() == iv({0, 1, -1, 0}));
    CHECK(canonicalize(iv({0, 0, 0, 1}), ctx).coords() == iv({1, 1, -1, 0}));
    CHECK_THROWS_AS(canonicalize(iv({1, 2, 3}), ctx), ParseError);
}

TEST_CASE("pairing")
{
    auto ctx = QuotientContext::bipartite(2, 2);
    MVector u(ctx, iv({1, 1, 1, 1}));
    CHECK(pairing(u, canonicalize(iv({1, 0, 0, 0}), ctx)) == 1);
    NVector f2 = canonicalize(iv({0, 0, 0, 1}), ctx);
    CHECK(f2.coords() == iv({1, 1, -1, 0}));
    CHECK(pairing(u, f2) == 1);
    CHECK(dot(u.coords(), iv({0, 0, 0, 1})) == 1);

    auto plain = QuotientContext::plain(4);
    CHECK(pairing(MVector(plain, iv({0, 1, 0, 1})), NVector(plain, iv({0, 0, 1, 1}))) == 1);
    CHECK_THROWS_AS(pairing(u, NVector(plain, iv({0, 0, 1, 1}))), PreconditionError);
    CHECK_THROWS_AS(MVector(ctx, iv({1, 0, 0, 0})), PreconditionError);
}

TEST_CASE("primitive part")
{
    auto ctx = QuotientContext::bipartite(2, 2);
    CHECK(primitive_part(NVector(ctx, iv({0, 2, -2, 0}))).coords() == iv({0, 1, -1, 0}));
    CHECK(primitive_part(NVector(ctx, iv({0, 1, -1, 0}))).coords() == iv({0, 1, -1, 0}));
    CHECK(primitive_part(NVector(ctx, iv({3, 3, -3, 0}))).coords() == iv({1, 1, -1, 0}));
    CHECK_THROWS_AS(primitive_part(NVector(ctx, iv({0, 0, 0, 0}))), PreconditionError);
}

TEST_CASE("smooth ray sets")
{
    auto ctx = QuotientContext::bipartite(2, 2);
    std::vector<NVector> ef{NVector(ctx, iv({1, 0, 0, 0})), NVector(ctx, iv({0, 0, 1, 0}))};
    CHECK(is_smooth_ray_set(ef, ctx));

    auto plain = QuotientContext::plain(2);
    std::vector<NVector> bad{NVector(plain, iv({1, 0})), NVector(plain, iv({1, 2}))};
    CHECK_FALSE(is_smooth_ray_set(bad, plain));

    // a two-sided ray together with one e_i and one f_j
    std::vector<NVector> triple{NVector(ctx, iv({0, 1, -1, 0})), NVector(ctx, iv({1, 0, 0, 0})),
                                NVector(ctx, iv({0, 0, 1, 0}))};
    CHECK(is_smooth_ray_set(triple, ctx));

    std::vector<NVector> dependent{NVector(plain, iv({1, 1})), NVector(plain, iv({2, 2}))};
    CHECK_THROWS_AS(is_smooth_ray_set(dependent, plain), PreconditionError);
}

TEST_CASE("smith invariant factors")
{
    CHECK(smith_invariant_factors(im({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == iv({2, 6, 12}));
    CHECK(smith_invariant_factors(im({{1, 0}, {1, 2}})) == iv({1, 2}));
    CHECK(smith_invariant_factors(im({{0, 0}, {0, 0}})).empty());
}

TEST_CASE("rational linear algebra")
{
    CHECK(rank(im({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
    RatMatrix k = nullspace(to_rational(im({{1, 1, 0}, {0, 1, 1}})), 3);
    REQUIRE(k.size() == 1);
    CHECK(primitive(std::span<const Rational>(k[0])) == iv({1, -1, 1}));
    CHECK(row_space_basis(im({{2, 0}, {4, 0}, {0, 3}})) == im({{1, 0}, {0, 1}}));
}

TEST_CASE("property: canonicalize is constant on cosets")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(rng, 1, 5), n = uniform(rng, 1, 5);
        auto ctx = QuotientContext::bipartite(m, n);
        IntVector v = random_vector(rng, m + n, 20);
        NVector c = canonicalize(v, ctx);
        CHECK(c.coords().back() == 0);
        CHECK(canonicalize(c.coords(), ctx) == c);
        IntVector w = ctx.w();
        for (int k = -10; k <= 10; ++k) {
            IntVector shifted = v;
            for (int i = 0; i < m + n; ++i)
                shifted[i] += k * w[i];
            CHECK(canonicalize(shifted, ctx) == c);
        }
    }
}

TEST_CASE("property: pairing is well defined on cosets")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(rng, 1, 5), n = uniform(rng, 1, 5);
        auto ctx = QuotientContext::bipartite(m, n);
        IntVector u = ctx.expand_m(random_vector(rng, m + n - 1, 9));
        MVector mu(ctx, u);
        IntVector v = random_vector(rng, m + n, 9);
        Integer expected = pairing(mu, canonicalize(v, ctx));
        CHECK(dot(u, v) == expected);
        CHECK(dot(ctx.reduce_m(u), ctx.reduce_n(canonicalize(v, ctx).coords())) == expected);
    }
}

TEST_CASE("property: single rays are smooth iff primitive")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
        auto ctx = QuotientContext::bipartite(m, n);
        NVector v = canonicalize(random_vector(rng, m + n, 6), ctx);
        if (v.is_zero())
            continue;
        std::vector<NVector> one{v};
        CHECK(is_smooth_ray_set(one, ctx) == (primitive_part(v) == v));
    }
}

TEST_CASE("property: relabeling commutes with the lattice operations")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
        auto ctx = QuotientContext::bipartite(m, n);
        std::vector<int> perm(m + n);
        for (int i = 0; i < m + n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.begin() + m, rng);
        std::shuffle(perm.begin() + m, perm.end(), rng);
        auto apply = [&](const IntVector& x) {
            IntVector y(x.size());
            for (size_t i = 0; i < x.size(); ++i)
                y[perm[i]] = x[i];
            return y;
        };
        IntVector v = random_vector(rng, m + n, 9);
        IntVector u = ctx.expand_m(random_vector(rng, m + n - 1, 9));
        CHECK(canonicalize(apply(canonicalize(v, ctx).coords()), ctx) == canonicalize(apply(v), ctx));
        CHECK(pairing(MVector(ctx, apply(u)), canonicalize(apply(v), ctx)) ==
              pairing(MVector(ctx, u), canonicalize(v, ctx)));
        NVector c = canonicalize(v, ctx);
        if (!c.is_zero())
            CHECK(primitive_part(canonicalize(apply(c.coords()), ctx)) ==
                  canonicalize(apply(primitive_part(c).coords()), ctx));
    }
}
