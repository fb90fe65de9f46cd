#include "hunters/kernel.hpp"

#include <limits>
#include <sstream>

namespace hunters {

NeighborhoodClasses neighborhood_classes(const Graph& g, const VertexSet& u) {
    if (u.size() != static_cast<std::size_t>(g.n()) || !is_vertex_cover(g, u))
        throw NotCover("vertex set does not cover every edge");
    NeighborhoodClasses classes;
    for (int v = 0; v < g.n(); ++v)
        if (!u.test(v)) classes[g.neighbors(v)].push_back(v);
    return classes;
}

std::uint64_t kernel_size_bound(int t) {
    if (t >= 29) return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{1} << (2 * t)) * static_cast<std::uint64_t>(t + 1) + 2 * static_cast<std::uint64_t>(t);
}

KernelResult kernelize(const Graph& g, int k, const VertexSet& u) {
    require_connected(g);
    if (k < 1) throw BadParameters("k must be at least 1");
    auto classes = neighborhood_classes(g, u);
    KernelResult r;
    r.t = static_cast<int>(u.count());
    r.k = k;
    r.size_bound = kernel_size_bound(r.t);
    if (k >= r.t) {
        r.trivially_yes = true;
        return r;
    }
    VertexSet keep = g.all();
    for (const auto& [nbhd, cls] : classes) {
        if (static_cast<int>(cls.size()) <= k + 1) continue;
        for (std::size_t i = k + 1; i < cls.size(); ++i) {
            keep.reset(cls[i]);
            ++r.removed;
        }
    }
    r.kept = members(keep);
    r.reduced = induced_subgraph(g, r.kept);
    if (!is_connected(r.reduced)) throw InternalError("kernel lost connectivity");
    if (static_cast<std::uint64_t>(r.reduced.n()) > r.size_bound) throw InternalError("kernel exceeds its size bound");
    return r;
}

bool fpt_decide(const Graph& g, int k, Mode mode) {
    auto r = kernelize(g, k, vertex_cover(g, CoverMode::approx2));
    if (r.trivially_yes) return true;
    if (r.reduced.n() > kSolverMaxVertices)
        throw SizeLimitExceeded("kernel has " + std::to_string(r.reduced.n()) + " vertices");
    const Graph& h = r.reduced;
    return mode == Mode::h ? decide_h(h, h.all(), k).yes : decide_mh(h, h.all(), k).yes;
}

std::string format_kernel_map(const KernelResult& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.kept.size(); ++i) out << r.kept[i] << ' ' << i << '\n';
    return out.str();
}

}  // namespace hunters
