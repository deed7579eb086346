#include "pathfactor/graph_gen.hpp"

namespace pathfactor {

Graph erdos_renyi(int n, std::uint64_t p_millionths, Rng& rng) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_below(rng, 1'000'000) < p_millionths) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

namespace {
constexpr std::uint64_t kEdgeProbs[] = {300'000, 500'000, 700'000};
}

Graph sample_graph(int n_min, int n_max, Rng& rng) {
    int n = n_min + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
    std::uint64_t p = kEdgeProbs[rand_below(rng, 3)];
    return erdos_renyi(n, p, rng);
}

Graph sample_connected_graph(int n_min, int n_max, Rng& rng) {
    while (true) {
        Graph g = sample_graph(n_min, n_max, rng);
        if (is_connected(g)) return g;
    }
}

}  // namespace pathfactor
