#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "pathfactor/graph.hpp"

namespace pathfactor {

// All randomness below consumes raw mt19937_64 output with integer
// arithmetic only, so identical seeds give identical graphs on every
// platform (std distributions are implementation-defined).
using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

// Erdos-Renyi G(n, p) with p expressed in millionths.
Graph erdos_renyi(int n, std::uint64_t p_millionths, Rng& rng);

// Sampler used by the scan machinery and the test harness: order uniform in
// [n_min, n_max], edge probability drawn per sample from {0.3, 0.5, 0.7}.
Graph sample_graph(int n_min, int n_max, Rng& rng);

// Redraws until connected.
Graph sample_connected_graph(int n_min, int n_max, Rng& rng);

// Every labeled graph of order n (2^(n(n-1)/2) of them); fn returns true to
// stop early. Practical only for n <= 7.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    const int pairs = n * (n - 1) / 2;
    if (pairs >= 64) throw std::invalid_argument("for_each_labeled_graph: order too large");
    std::vector<Edge> all;
    all.reserve(pairs);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        if (fn(Graph(n, std::move(es)))) return;
    }
}

}  // namespace pathfactor
