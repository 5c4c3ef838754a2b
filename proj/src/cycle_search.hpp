#pragma once

#include <array>
#include <span>
#include <type_traits>

#include "pancycle/graph.hpp"

namespace pancycle::detail {

// Canonical fixed-length cycle backtracking. Each cycle is produced once, as
// the sequence starting at its smallest vertex with c_1 < c_{l-1}; sequences
// come out in lexicographic order. A partial path is abandoned when the head
// is farther from the anchor (inside the vertices above it) than the number
// of edges still to place.
template <class Visit>
class CycleEnumerator {
public:
    CycleEnumerator(const Graph& g, int l, Visit& visit) : g_(g), l_(l), visit_(visit) {}

    // Returns true when the visitor asked to stop.
    bool run() {
        const int n = g_.order();
        if (l_ < 3 || l_ > n) return false;
        for (Vertex a = 0; a + l_ <= n; ++a) {
            allowed_ = g_.vertices().bits() & ~((std::uint64_t{1} << a) - 1);
            distances_from(a);
            path_[0] = a;
            if (descend(1, std::uint64_t{1} << a)) return true;
        }
        return false;
    }

private:
    void distances_from(Vertex a) {
        dist_.fill(kFar);
        dist_[a] = 0;
        std::uint64_t seen = std::uint64_t{1} << a, frontier = seen;
        for (int d = 1; frontier; ++d) {
            std::uint64_t next = 0;
            for (Vertex v : VertexSet(frontier)) next |= g_.row(v);
            next &= allowed_ & ~seen;
            for (Vertex v : VertexSet(next)) dist_[v] = d;
            seen |= next;
            frontier = next;
        }
    }

    bool descend(int depth, std::uint64_t used) {
        const Vertex head = path_[depth - 1];
        if (depth == l_) {
            if (g_.adjacent(head, path_[0]) && path_[1] < head)
                return visit_(std::span<const Vertex>(path_.data(), static_cast<std::size_t>(l_)), used);
            return false;
        }
        const int budget = l_ - depth;
        for (Vertex v : VertexSet(g_.row(head) & allowed_ & ~used)) {
            if (dist_[v] > budget) continue;
            path_[depth] = v;
            if (descend(depth + 1, used | (std::uint64_t{1} << v))) return true;
        }
        return false;
    }

    static constexpr int kFar = kMaxOrder + 1;

    const Graph& g_;
    int l_;
    Visit& visit_;
    std::uint64_t allowed_ = 0;
    std::array<int, kMaxOrder> dist_{};
    std::array<Vertex, kMaxOrder> path_{};
};

// visit(std::span<const Vertex> cycle, std::uint64_t cycle_mask) -> bool stop
template <class Visit>
bool for_each_cycle(const Graph& g, int l, Visit&& visit) {
    CycleEnumerator<std::remove_reference_t<Visit>> e(g, l, visit);
    return e.run();
}

}  // namespace pancycle::detail
