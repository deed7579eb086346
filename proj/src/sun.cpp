#include "pathfactor/sun.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathfactor/matching.hpp"

namespace pathfactor {

std::optional<SunDecomposition> classify_sun(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("classify_sun requires a connected graph");
    const int n = g.order();
    if (n == 1) return SunDecomposition{SunKind::Trivial, {}, {}, {}};
    if (n == 2) return SunDecomposition{SunKind::Edge, {}, {}, {}};
    if (n % 2 != 0) return std::nullopt;

    // pendants must be exactly the degree-1 vertices, one per core vertex
    std::vector<int> pendants;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) pendants.push_back(v);
    if (static_cast<int>(pendants.size()) != n / 2) return std::nullopt;

    std::vector<bool> is_pendant(n, false);
    for (int u : pendants) is_pendant[u] = true;
    std::vector<int> pendant_of(n, -1);  // core vertex -> its pendant
    for (int u : pendants) {
        int v = g.neighbors(u).front();
        if (is_pendant[v]) return std::nullopt;   // two pendants joined: not a corona
        if (pendant_of[v] != -1) return std::nullopt;  // core vertex with two pendants
        pendant_of[v] = u;
    }

    std::vector<int> core_vertices;
    for (int v = 0; v < n; ++v)
        if (!is_pendant[v]) core_vertices.push_back(v);
    for (int v : core_vertices)
        if (pendant_of[v] == -1) return std::nullopt;

    VertexSet pendant_set(pendants);
    Graph core = delete_vertices(g, pendant_set).graph;
    if (!is_factor_critical(core)) return std::nullopt;

    SunDecomposition out;
    out.kind = SunKind::Corona;
    out.core = std::move(core);
    out.core_vertices = VertexSet(core_vertices);
    for (int v : core_vertices) out.pairing.emplace_back(v, pendant_of[v]);
    return out;
}

bool is_sun(const Graph& g) {
    if (!is_connected(g)) return false;
    return classify_sun(g).has_value();
}

bool is_big_sun(const Graph& g) { return g.order() >= 6 && is_sun(g); }

int sun_count(const Graph& g) {
    int count = 0;
    for (const auto& comp : components(g))
        if (classify_sun(comp)) ++count;
    return count;
}

}  // namespace pathfactor
