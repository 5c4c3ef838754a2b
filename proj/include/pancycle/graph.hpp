#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace pancycle {

using Vertex = int;
inline constexpr int kMaxOrder = 64;

/// A subset of [0, 64) stored as one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    std::vector<Vertex> to_vector() const;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on at most 64 vertices. Row v holds N(v) as a bitset.
/// Immutable once built; every constructor validates symmetry and the absence
/// of loops.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[v]); }
    std::uint64_t row(Vertex v) const { return rows_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1u; }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    std::vector<Edge> edges() const;

    Graph without_edge(Vertex u, Vertex v) const;
    Graph with_edge(Vertex u, Vertex v) const;
    Graph induced(VertexSet s) const;  // relabels s in increasing order
    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b);
    friend Graph parse_graph6(std::string_view line);  // fills rows without re-validating

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

struct StVerdict {
    static constexpr int kVacuous = std::numeric_limits<int>::max();

    bool holds = true;
    bool vacuous = false;  // n < s, nothing to check
    std::optional<VertexSet> witness;
    // Exact minimum when requested, kVacuous when n < s, otherwise nullopt.
    std::optional<int> min_size;
};

int min_degree(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
bool is_two_connected(const Graph& g);
int induced_size(const Graph& g, VertexSet s);

/// Every s-subset must induce at least t edges. The witness is the first
/// violating subset in lexicographic order. Without `want_min` the scan stops
/// there and skips subtrees that already reach t edges, so no minimum is
/// reported.
StVerdict check_st(const Graph& g, int s, int t, bool want_min = false);

int independence_number(const Graph& g);

Graph blow_up(const Graph& h, int k);
std::optional<int> recognize_c5_blowup(const Graph& g);

namespace graphs {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph bowtie();
Graph dumbbell(int path_length);
}  // namespace graphs

}  // namespace pancycle
