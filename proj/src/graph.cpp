#include "pancycle/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pancycle/errors.hpp"

namespace pancycle {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
}

namespace {

void check_order(int n) {
    if (n > kMaxOrder) throw OrderTooLarge("graph order " + std::to_string(n) + " exceeds 64");
    if (n < 1) throw PreconditionViolated("graph order must be at least 1");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionViolated("edge endpoint out of range");
        if (u == v) throw PreconditionViolated("self-loop at vertex " + std::to_string(u));
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n) throw PreconditionViolated("row count differs from order");
    const std::uint64_t mask = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask) throw PreconditionViolated("adjacency row has bits beyond the order");
        if ((rows[v] >> v) & 1u) throw PreconditionViolated("self-loop at vertex " + std::to_string(v));
        g.rows_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u)
        for (Vertex v : VertexSet(rows[u]))
            if (!((rows[v] >> u) & 1u)) throw PreconditionViolated("adjacency is not symmetric");
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (Vertex v : VertexSet(rows_[u]))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.rows_[u] &= ~(std::uint64_t{1} << v);
    g.rows_[v] &= ~(std::uint64_t{1} << u);
    return g;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionViolated("invalid edge");
    Graph g = *this;
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
    return g;
}

Graph Graph::induced(VertexSet s) const {
    const std::vector<Vertex> keep = s.to_vector();
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) {
                g.rows_[i] |= std::uint64_t{1} << j;
                g.rows_[j] |= std::uint64_t{1} << i;
            }
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    const std::uint64_t all = VertexSet::range(n_).bits();
    for (int v = 0; v < n_; ++v) g.rows_[v] = all & ~rows_[v] & ~(std::uint64_t{1} << v);
    return g;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

int min_degree(const Graph& g) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    std::uint64_t seen = std::uint64_t{1} << within.first();
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (Vertex v : VertexSet(frontier)) next |= g.row(v);
        next &= within.bits() & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == within.bits();
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

namespace {

// Depth-first search with low points; stops at the first articulation vertex.
class CutVertexSearch {
public:
    explicit CutVertexSearch(const Graph& g) : g_(g) {}

    bool has_cut_vertex() {
        visit(0, -1);
        return found_;
    }
    int reached() const { return timer_; }

private:
    void visit(Vertex u, Vertex parent) {
        disc_[u] = low_[u] = ++timer_;
        int children = 0;
        for (Vertex w : g_.neighbors(u)) {
            if (found_) return;
            if (w == parent) continue;
            if (disc_[w]) {
                low_[u] = std::min(low_[u], disc_[w]);
                continue;
            }
            ++children;
            visit(w, u);
            low_[u] = std::min(low_[u], low_[w]);
            if (parent >= 0 && low_[w] >= disc_[u]) found_ = true;
        }
        if (parent < 0 && children > 1) found_ = true;
    }

    const Graph& g_;
    std::array<int, kMaxOrder> disc_{};
    std::array<int, kMaxOrder> low_{};
    int timer_ = 0;
    bool found_ = false;
};

}  // namespace

bool is_two_connected(const Graph& g) {
    if (g.order() < 3) return false;
    CutVertexSearch search(g);
    if (search.has_cut_vertex()) return false;
    return search.reached() == g.order();
}

int induced_size(const Graph& g, VertexSet s) {
    int twice = 0;
    for (Vertex v : s) twice += std::popcount(g.row(v) & s.bits());
    return twice / 2;
}

namespace {

// Lexicographic s-subset enumeration with the edge count maintained as
// vertices are pushed. A partial subset already inducing >= t edges cannot
// be completed into a violation, so its subtree is skipped unless the exact
// minimum is still needed.
class StScan {
public:
    StScan(const Graph& g, int s, int t, bool want_min) : g_(g), n_(g.order()), s_(s), t_(t), want_min_(want_min) {}

    StVerdict run() {
        descend(0, 0, 0, 0);
        StVerdict v;
        v.holds = !witness_.has_value();
        v.witness = witness_;
        if (want_min_) v.min_size = best_;
        return v;
    }

private:
    // Returns false to abort the whole scan.
    bool descend(int depth, int start, std::uint64_t chosen, int count) {
        if (depth == s_) {
            if (count < best_) best_ = count;
            if (count < t_ && !witness_) {
                witness_ = VertexSet(chosen);
                if (!want_min_) return false;
            }
            return true;
        }
        if (count >= t_ && (!want_min_ || count >= best_)) return true;
        const int last = n_ - (s_ - depth);
        for (int v = start; v <= last; ++v) {
            const int add = std::popcount(g_.row(v) & chosen);
            if (!descend(depth + 1, v + 1, chosen | (std::uint64_t{1} << v), count + add)) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_, s_, t_;
    bool want_min_;
    int best_ = StVerdict::kVacuous;
    std::optional<VertexSet> witness_;
};

}  // namespace

StVerdict check_st(const Graph& g, int s, int t, bool want_min) {
    if (s < 1 || s > kMaxOrder || t < 0) throw PreconditionViolated("check_st requires 1 <= s <= 64 and t >= 0");
    if (g.order() < s) {
        StVerdict v;
        v.vacuous = true;
        v.min_size = StVerdict::kVacuous;
        return v;
    }
    return StScan(g, s, t, want_min).run();
}

namespace {

void mis_search(const Graph& g, std::uint64_t pool, int size, int& best) {
    if (!pool) {
        best = std::max(best, size);
        return;
    }
    if (size + std::popcount(pool) <= best) return;

    Vertex low = -1, high = -1;
    int low_deg = kMaxOrder + 1, high_deg = -1;
    for (Vertex v : VertexSet(pool)) {
        const int d = std::popcount(g.row(v) & pool);
        if (d < low_deg) low_deg = d, low = v;
        if (d > high_deg) high_deg = d, high = v;
    }
    // A vertex of degree <= 1 in the pool always belongs to some maximum set.
    if (low_deg <= 1) {
        mis_search(g, pool & ~g.row(low) & ~(std::uint64_t{1} << low), size + 1, best);
        return;
    }
    mis_search(g, pool & ~g.row(high) & ~(std::uint64_t{1} << high), size + 1, best);
    mis_search(g, pool & ~(std::uint64_t{1} << high), size, best);
}

}  // namespace

int independence_number(const Graph& g) {
    int best = 0;
    mis_search(g, g.vertices().bits(), 0, best);
    return best;
}

Graph blow_up(const Graph& h, int k) {
    if (k < 1) throw PreconditionViolated("blow-up factor must be positive");
    if (h.order() * k > kMaxOrder) throw OrderTooLarge("blow-up order exceeds 64");
    std::vector<Edge> edges;
    for (auto [u, v] : h.edges())
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) edges.emplace_back(u * k + a, v * k + b);
    return Graph(h.order() * k, edges);
}

std::optional<int> recognize_c5_blowup(const Graph& g) {
    const int n = g.order();
    if (n % 5 != 0) return std::nullopt;
    const int k = n / 5;

    // Vertices with identical open neighbourhoods are automatically pairwise
    // non-adjacent, and adjacency between two such classes is all-or-nothing.
    std::map<std::uint64_t, std::vector<Vertex>> classes;
    for (int v = 0; v < n; ++v) classes[g.row(v)].push_back(v);
    if (classes.size() != 5) return std::nullopt;

    std::vector<Vertex> reps;
    for (const auto& [row, members] : classes) {
        if (static_cast<int>(members.size()) != k) return std::nullopt;
        reps.push_back(members.front());
    }
    std::vector<Edge> quotient;
    for (int i = 0; i < 5; ++i) {
        int deg = 0;
        for (int j = 0; j < 5; ++j)
            if (i != j && g.adjacent(reps[i], reps[j])) {
                ++deg;
                if (i < j) quotient.emplace_back(i, j);
            }
        if (deg != 2) return std::nullopt;
    }
    if (!is_connected(Graph(5, quotient))) return std::nullopt;
    return k;
}

namespace graphs {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Triangles {0,1,2} and {L+2,L+3,L+4} joined by the path 2,3,...,L+2.
Graph dumbbell(int path_length) {
    if (path_length == 0) return bowtie();
    const int b = path_length + 2;
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {b, b + 1}, {b, b + 2}, {b + 1, b + 2}};
    for (int v = 2; v < b; ++v) e.emplace_back(v, v + 1);
    return Graph(b + 3, e);
}

}  // namespace graphs

}  // namespace pancycle
