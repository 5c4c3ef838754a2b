#include "pancycle/gadgets.hpp"

#include <algorithm>
#include <tuple>

#include "cycle_search.hpp"
#include "pancycle/errors.hpp"

namespace pancycle {

namespace {

// Vertices strictly greater than v.
constexpr std::uint64_t above(Vertex v) { return v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1); }

}  // namespace

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b : VertexSet(g.row(a) & above(a))) {
            const std::uint64_t common = g.row(a) & g.row(b) & above(b);
            if (common) return std::array<Vertex, 3>{a, b, std::countr_zero(common)};
        }
    return std::nullopt;
}

std::optional<TriCycleWitness> find_c_tilde(const Graph& g, int l) {
    if (l < 3 || l > g.order() - 1) return std::nullopt;
    std::optional<TriCycleWitness> found;
    detail::for_each_cycle(g, l, [&](std::span<const Vertex> cyc, std::uint64_t mask) {
        Vertex apex = -1;
        int edge = 0;
        for (int i = 0; i < l; ++i) {
            const std::uint64_t common = g.row(cyc[i]) & g.row(cyc[(i + 1) % l]) & ~mask;
            if (!common) continue;
            const Vertex y = std::countr_zero(common);
            if (apex < 0 || y < apex) apex = y, edge = i;
        }
        if (apex < 0) return false;
        found = TriCycleWitness{std::vector<Vertex>(cyc.begin(), cyc.end()), apex, edge};
        return true;
    });
    return found;
}

namespace {

class SwitchSearch {
public:
    SwitchSearch(const Graph& g, int l) : g_(g), l_(l) {}

    std::optional<SwitchWitness> run() {
        for (Vertex v = 0; v < g_.order() && !optimal_; ++v) {
            path_.assign(1, v);
            descend(std::uint64_t{1} << v);
        }
        return best_;
    }

private:
    // Key compared lexicographically: smaller is better.
    using Key = std::tuple<int, int, int>;

    void descend(std::uint64_t used) {
        if (optimal_) return;
        if (static_cast<int>(path_.size()) == l_ + 1) {
            score(used);
            return;
        }
        for (Vertex v : VertexSet(g_.row(path_.back()) & ~used)) {
            path_.push_back(v);
            descend(used | (std::uint64_t{1} << v));
            path_.pop_back();
            if (optimal_) return;
        }
    }

    void score(std::uint64_t used) {
        const Vertex last = path_.back();
        int nbr = 0;
        while (!g_.adjacent(path_[nbr], last)) ++nbr;  // v_l always qualifies
        const std::uint64_t outside = g_.vertices().bits() & ~used;
        for (Vertex y : VertexSet(outside)) {
            int t = -1, s = 0;
            for (int i = 0; i + 1 <= l_; ++i) {
                if (g_.adjacent(y, path_[i]) && g_.adjacent(y, path_[i + 1])) {
                    t = i;
                    int j = i + 1;
                    while (j + 1 <= l_ && g_.adjacent(y, path_[j + 1])) ++j;
                    s = j - i;
                    break;
                }
            }
            if (t < 0) continue;
            const Key key{t, -s, nbr};
            if (!best_ || key < best_key_) {
                best_key_ = key;
                best_ = SwitchWitness{path_, y, t + 1, s};
                if (t == 0 && s == l_ && nbr == 0) optimal_ = true;
            }
        }
    }

    const Graph& g_;
    int l_;
    std::vector<Vertex> path_;
    std::optional<SwitchWitness> best_;
    Key best_key_{};
    bool optimal_ = false;
};

std::vector<std::array<Vertex, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b : VertexSet(g.row(a) & above(a)))
            for (Vertex c : VertexSet(g.row(a) & g.row(b) & above(b))) out.push_back({a, b, c});
    return out;
}

std::uint64_t mask_of(const std::array<Vertex, 3>& tri) {
    return (std::uint64_t{1} << tri[0]) | (std::uint64_t{1} << tri[1]) | (std::uint64_t{1} << tri[2]);
}

// Lexicographically first extension of `path` by exactly `len` edges ending at `to`,
// whose interior lies in `interior`.
bool exact_path(const Graph& g, Vertex to, int len, std::uint64_t interior, std::vector<Vertex>& path) {
    const Vertex head = path.back();
    if (len == 1) {
        if (!g.adjacent(head, to)) return false;
        path.push_back(to);
        return true;
    }
    // Distance to `to` through the remaining interior bounds the search.
    std::uint64_t reach = std::uint64_t{1} << to, frontier = reach;
    for (int d = 1; d < len && frontier; ++d) {
        std::uint64_t next = 0;
        for (Vertex v : VertexSet(frontier)) next |= g.row(v);
        next &= interior & ~reach;
        reach |= next;
        frontier = next;
    }
    for (Vertex v : VertexSet(g.row(head) & reach & interior)) {
        path.push_back(v);
        if (exact_path(g, to, len - 1, interior & ~(std::uint64_t{1} << v), path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<SwitchWitness> find_switch(const Graph& g, int l) {
    if (l < 3 || l > g.order() - 1) return std::nullopt;
    return SwitchSearch(g, l).run();
}

std::optional<DumbbellWitness> find_dumbbell(const Graph& g, int l) {
    if (l < 0) throw PreconditionViolated("dumbbell path length must be non-negative");
    const auto tris = all_triangles(g);
    const std::uint64_t all = g.vertices().bits();
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            const std::uint64_t ma = mask_of(tris[i]), mb = mask_of(tris[j]);
            const int shared = std::popcount(ma & mb);
            if (l == 0) {
                if (shared == 1) return DumbbellWitness{tris[i], tris[j], {}};
                continue;
            }
            if (shared != 0) continue;
            for (Vertex a : tris[i])
                for (Vertex b : tris[j]) {
                    std::vector<Vertex> path{a};
                    if (exact_path(g, b, l, all & ~ma & ~mb, path)) return DumbbellWitness{tris[i], tris[j], path};
                }
        }
    return std::nullopt;
}

std::optional<PathWitness> shortest_st_path(const Graph& g, VertexSet s, VertexSet t, VertexSet excluded) {
    const VertexSet all = g.vertices();
    if (s.empty() || t.empty()) throw InvalidSets("S and T must be nonempty");
    if (!s.disjoint(t)) throw InvalidSets("S and T must be disjoint");
    if (!excluded.disjoint(s | t)) throw InvalidSets("excluded vertices must avoid S and T");
    if (!(s | t | excluded).subset_of(all)) throw InvalidSets("sets must lie inside the vertex set");

    for (Vertex u : s)
        if (const VertexSet hit = g.neighbors(u) & t; !hit.empty()) return PathWitness{{u, hit.first()}};

    const std::uint64_t interior = (all - s - t - excluded).bits();
    std::array<Vertex, kMaxOrder> parent{};
    std::uint64_t seen = 0, frontier = 0;
    for (Vertex u : s) {
        const std::uint64_t fresh = g.row(u) & interior & ~seen;
        for (Vertex v : VertexSet(fresh)) parent[v] = u;
        seen |= fresh;
    }
    frontier = seen;
    while (frontier) {
        for (Vertex v : VertexSet(frontier)) {
            if (const VertexSet hit = g.neighbors(v) & t; !hit.empty()) {
                std::vector<Vertex> rev{hit.first(), v};
                while (!s.contains(rev.back())) rev.push_back(parent[rev.back()]);
                return PathWitness{{rev.rbegin(), rev.rend()}};
            }
        }
        std::uint64_t next = 0;
        for (Vertex v : VertexSet(frontier)) {
            const std::uint64_t fresh = g.row(v) & interior & ~seen & ~next;
            for (Vertex w : VertexSet(fresh)) parent[w] = v;
            next |= fresh;
        }
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

namespace {

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.order(); }

bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
    VertexSet seen;
    for (Vertex v : vs) {
        if (!in_range(g, v) || seen.contains(v)) return false;
        seen.insert(v);
    }
    return true;
}

bool is_triangle(const Graph& g, const std::array<Vertex, 3>& t) {
    for (Vertex v : t)
        if (!in_range(g, v)) return false;
    return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) &&
           g.adjacent(t[0], t[2]);
}

}  // namespace

bool is_valid(const Graph& g, const TriCycleWitness& w) {
    const int l = w.length();
    if (l < 3 || !distinct_in_range(g, w.cycle) || !in_range(g, w.apex)) return false;
    if (std::find(w.cycle.begin(), w.cycle.end(), w.apex) != w.cycle.end()) return false;
    for (int i = 0; i < l; ++i)
        if (!g.adjacent(w.cycle[i], w.cycle[(i + 1) % l])) return false;
    if (w.edge_index < 0 || w.edge_index >= l) return false;
    return g.adjacent(w.apex, w.cycle[w.edge_index]) && g.adjacent(w.apex, w.cycle[(w.edge_index + 1) % l]);
}

bool is_valid(const Graph& g, const SwitchWitness& w) {
    const int len = w.length();
    if (len < 1 || !distinct_in_range(g, w.path) || !in_range(g, w.apex)) return false;
    if (std::find(w.path.begin(), w.path.end(), w.apex) != w.path.end()) return false;
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(w.path[i], w.path[i + 1])) return false;
    if (w.t < 1 || w.s < 1 || w.t + w.s > len + 1) return false;
    for (int i = w.t; i <= w.t + w.s; ++i)
        if (!g.adjacent(w.apex, w.path[i - 1])) return false;
    return true;
}

bool is_valid(const Graph& g, const DumbbellWitness& w) {
    if (!is_triangle(g, w.tri_a) || !is_triangle(g, w.tri_b)) return false;
    int shared = 0;
    for (Vertex a : w.tri_a)
        for (Vertex b : w.tri_b) shared += a == b;
    if (w.path.empty()) return shared == 1;
    if (shared != 0 || w.path.size() < 2 || !distinct_in_range(g, w.path)) return false;
    auto in = [](const std::array<Vertex, 3>& t, Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); };
    if (!in(w.tri_a, w.path.front()) || !in(w.tri_b, w.path.back())) return false;
    for (std::size_t i = 1; i + 1 < w.path.size(); ++i)
        if (in(w.tri_a, w.path[i]) || in(w.tri_b, w.path[i])) return false;
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i)
        if (!g.adjacent(w.path[i], w.path[i + 1])) return false;
    return true;
}

bool is_valid(const Graph& g, const PathWitness& w, VertexSet s, VertexSet t) {
    if (w.vertices.size() < 2 || !distinct_in_range(g, w.vertices)) return false;
    if (!s.contains(w.vertices.front()) || !t.contains(w.vertices.back())) return false;
    for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i)
        if (s.contains(w.vertices[i]) || t.contains(w.vertices[i])) return false;
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!g.adjacent(w.vertices[i], w.vertices[i + 1])) return false;
    return true;
}

std::vector<Vertex> reroute_through_apex(const TriCycleWitness& w) {
    std::vector<Vertex> out;
    out.reserve(w.cycle.size() + 1);
    out.assign(w.cycle.begin(), w.cycle.begin() + w.edge_index + 1);
    out.push_back(w.apex);
    out.insert(out.end(), w.cycle.begin() + w.edge_index + 1, w.cycle.end());
    return out;
}

}  // namespace pancycle
