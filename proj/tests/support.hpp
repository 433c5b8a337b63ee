#pragma once

#include "edgecone/bigraph.hpp"
#include "edgecone/lattice.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace edgecone;

inline IntVector iv(std::initializer_list<long> xs)
{
    IntVector out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix out;
    for (auto r : rows)
        out.push_back(iv(r));
    return out;
}

inline BipartiteGraph graph(int m, int n, std::initializer_list<std::pair<int, int>> es)
{
    std::vector<Edge> edges;
    for (auto [u, v] : es)
        edges.push_back({u, v});
    return BipartiteGraph(m, n, edges);
}

// K_{2,2} minus (1,3)
inline BipartiteGraph kucuk()
{
    return graph(2, 2, {{1, 4}, {2, 3}, {2, 4}});
}

// K_{4,4} minus (1,5),(2,5),(3,5)
inline BipartiteGraph one_two_sided_example()
{
    return complete_minus(4, 4, VertexSet::of({1, 2, 3}), VertexSet::of({5}));
}

inline BipartiteGraph two_two_sided_example()
{
    return graph(4, 4, {{1, 8}, {2, 7}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {4, 8}});
}

inline BipartiteGraph quad_face_example()
{
    return graph(5, 4, {{1, 6}, {1, 7}, {2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 6}, {4, 7}, {4, 8}, {4, 9},
                        {5, 6}, {5, 7}, {5, 8}, {5, 9}});
}

inline IntMatrix double_pyramid()
{
    return im({{0, 1, 0, 1}, {1, 0, 0, 1}, {-1, -1, 0, 1}, {0, 0, 1, 1}, {0, 0, -1, 1}});
}

inline IntMatrix sigma_prime()
{
    return im({{1, 0, 0, 1}, {1, 1, 1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});
}

// random bipartite graph with edge probability p; connected when asked
inline BipartiteGraph random_graph(std::mt19937_64& rng, int m, int n, double p, bool connected = true)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int i = 1; i <= m; ++i)
            for (int j = m + 1; j <= m + n; ++j)
                if (coin(rng))
                    edges.push_back({i, j});
        BipartiteGraph g(m, n, edges);
        if (!connected || g.connected())
            return g;
    }
}

inline int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntVector random_vector(std::mt19937_64& rng, int len, int bound)
{
    IntVector v;
    for (int i = 0; i < len; ++i)
        v.emplace_back(uniform(rng, -bound, bound));
    return v;
}

} // namespace testing
