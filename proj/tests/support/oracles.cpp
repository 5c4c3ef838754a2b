#include "oracles.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<bool>> matrix(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v);
    return a;
}

int induced_edges(const Graph& g, const std::vector<Vertex>& s) {
    int e = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]);
    return e;
}

std::vector<std::vector<Vertex>> subsets(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    if (k < 0 || k > n) return out;
    std::vector<Vertex> cur;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

StResult st_condition(const Graph& g, int s, int t) {
    StResult r;
    for (const auto& sub : subsets(g.order(), s)) {
        const int e = induced_edges(g, sub);
        r.min_size = std::min(r.min_size, e);
        if (e < t && r.holds) {
            r.holds = false;
            r.first_violation = sub;
        }
    }
    return r;
}

int independence_number(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(v);
        if (static_cast<int>(s.size()) > best && induced_edges(g, s) == 0) best = static_cast<int>(s.size());
    }
    return best;
}

bool connected(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.order();
    auto gone = [&](int v) { return !removed.empty() && removed[v]; };
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!gone(v)) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (!gone(w) && !seen[w] && g.adjacent(u, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

bool two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        std::vector<bool> removed(n, false);
        removed[v] = true;
        if (!connected(g, removed)) return false;
    }
    return true;
}

int min_degree(const Graph& g) {
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int d = 0;
        for (int w = 0; w < g.order(); ++w) d += g.adjacent(v, w);
        best = std::min(best, d);
    }
    return best;
}

std::vector<std::vector<Vertex>> all_cycles(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    std::vector<bool> on(n, false);
    std::function<void(int)> extend = [&](int start) {
        const Vertex head = path.back();
        for (Vertex w = start; w < n; ++w) {
            if (!g.adjacent(head, w)) continue;
            if (w == start && path.size() >= 3) out.push_back(path);
            if (w > start && !on[w]) {
                on[w] = true;
                path.push_back(w);
                extend(start);
                path.pop_back();
                on[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        on.assign(n, false);
        on[s] = true;
        extend(s);
    }
    return out;
}

std::set<int> cycle_lengths(const Graph& g) {
    std::set<int> out;
    for (const auto& c : all_cycles(g)) out.insert(static_cast<int>(c.size()));
    return out;
}

bool has_c_tilde(const Graph& g, int l) {
    for (const auto& c : all_cycles(g)) {
        if (static_cast<int>(c.size()) != l) continue;
        for (Vertex y = 0; y < g.order(); ++y) {
            if (std::find(c.begin(), c.end(), y) != c.end()) continue;
            for (int i = 0; i < l; ++i)
                if (g.adjacent(y, c[i]) && g.adjacent(y, c[(i + 1) % l])) return true;
        }
    }
    return false;
}

bool better(const SwitchKey& a, const SwitchKey& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.s != b.s) return a.s > b.s;
    return a.nbr < b.nbr;
}

SwitchKey switch_key(const Graph& g, const std::vector<Vertex>& path, Vertex, int t, int s) {
    int nbr = 1;
    while (!g.adjacent(path[nbr - 1], path.back())) ++nbr;
    return SwitchKey{t, s, nbr};
}

std::optional<SwitchKey> best_switch(const Graph& g, int l) {
    const int n = g.order();
    std::optional<SwitchKey> best;
    std::vector<Vertex> path;
    std::vector<bool> on(n, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(path.size()) == l + 1) {
            for (Vertex y = 0; y < n; ++y) {
                if (on[y]) continue;
                for (int t = 1; t <= l; ++t)
                    for (int s = 1; t + s <= l + 1; ++s) {
                        bool ok = true;
                        for (int i = t; i <= t + s; ++i) ok = ok && g.adjacent(y, path[i - 1]);
                        if (!ok) continue;
                        const SwitchKey k = switch_key(g, path, y, t, s);
                        if (!best || better(k, *best)) best = k;
                    }
            }
            return;
        }
        for (Vertex w = 0; w < n; ++w) {
            if (on[w] || (!path.empty() && !g.adjacent(path.back(), w))) continue;
            on[w] = true;
            path.push_back(w);
            rec();
            path.pop_back();
            on[w] = false;
        }
    };
    rec();
    return best;
}

int shortest_st_path(const Graph& g, const std::vector<bool>& s, const std::vector<bool>& t,
                     const std::vector<bool>& excluded) {
    const int n = g.order();
    int best = -1;
    std::vector<bool> on(n, false);
    std::function<void(Vertex, int)> rec = [&](Vertex head, int len) {
        for (Vertex w = 0; w < n; ++w) {
            if (on[w] || !g.adjacent(head, w)) continue;
            if (t[w]) {
                if (best < 0 || len + 1 < best) best = len + 1;
                continue;
            }
            if (s[w] || excluded[w]) continue;
            on[w] = true;
            rec(w, len + 1);
            on[w] = false;
        }
    };
    for (Vertex a = 0; a < n; ++a) {
        if (!s[a]) continue;
        on[a] = true;
        rec(a, 0);
        on[a] = false;
    }
    return best;
}

bool has_triangle(const Graph& g) {
    for (const auto& t : subsets(g.order(), 3))
        if (induced_edges(g, t) == 3) return true;
    return false;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<pancycle::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::string geng_path() {
    if (const char* env = std::getenv("PANCYCLE_GENG")) return env;
#ifdef PANCYCLE_GENG_PATH
    return PANCYCLE_GENG_PATH;
#else
    return "geng";
#endif
}

std::vector<std::string> geng(const std::string& args) {
    const std::string cmd = geng_path() + " -q " + args;
    std::FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("cannot run " + cmd);
    std::vector<std::string> out;
    char buf[512];
    while (std::fgets(buf, sizeof buf, p)) {
        std::string line(buf);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    if (pclose(p) != 0) throw std::runtime_error("generator failed: " + cmd);
    return out;
}

}  // namespace oracle
