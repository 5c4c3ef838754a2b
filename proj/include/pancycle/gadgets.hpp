#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pancycle/graph.hpp"

namespace pancycle {

/// A cycle c_0..c_{l-1} plus an apex adjacent to c_i and c_{i+1 mod l}.
struct TriCycleWitness {
    std::vector<Vertex> cycle;
    Vertex apex = -1;
    int edge_index = 0;

    int length() const { return static_cast<int>(cycle.size()); }
    friend bool operator==(const TriCycleWitness&, const TriCycleWitness&) = default;
};

/// Path v_1..v_{l+1} and a vertex y adjacent to v_t..v_{t+s}. `t` is 1-based
/// as in the usual notation; `s` is the full run length starting at t.
struct SwitchWitness {
    std::vector<Vertex> path;
    Vertex apex = -1;
    int t = 1;
    int s = 1;

    int length() const { return static_cast<int>(path.size()) - 1; }
    friend bool operator==(const SwitchWitness&, const SwitchWitness&) = default;
};

/// Two triangles joined by a path from a vertex of tri_a to a vertex of tri_b.
/// A bowtie is stored with |tri_a ∩ tri_b| = 1 and an empty path.
struct DumbbellWitness {
    std::array<Vertex, 3> tri_a{};
    std::array<Vertex, 3> tri_b{};
    std::vector<Vertex> path;

    bool is_bowtie() const { return path.empty(); }
    int length() const { return path.empty() ? 0 : static_cast<int>(path.size()) - 1; }
    friend bool operator==(const DumbbellWitness&, const DumbbellWitness&) = default;
};

/// An (S,T)-path u_1..u_k: u_1 in S, u_k in T, interior outside S and T.
struct PathWitness {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex successor(std::size_t i) const { return vertices.at(i + 1); }
    Vertex predecessor(std::size_t i) const { return vertices.at(i - 1); }
    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

/// First C~_l in canonical cycle order (cycle starts at its smallest vertex,
/// c_1 < c_{l-1}, sequences compared lexicographically), smallest apex for that
/// cycle, then smallest edge index.
std::optional<TriCycleWitness> find_c_tilde(const Graph& g, int l);

/// Switch with t minimal, then s maximal, then the smallest path index of a
/// neighbour of v_{l+1} minimal; remaining ties go to the lexicographically
/// smallest path and apex. Exhaustive over all paths, meant for small graphs.
std::optional<SwitchWitness> find_switch(const Graph& g, int l);

/// l = 0 asks for a bowtie; l >= 1 for two disjoint triangles joined by a path
/// of exactly l edges whose interior avoids both triangles.
std::optional<DumbbellWitness> find_dumbbell(const Graph& g, int l);

/// Breadth-first from all of S at once. Interior vertices avoid S, T and
/// `excluded`. Throws InvalidSets on empty or overlapping sets.
std::optional<PathWitness> shortest_st_path(const Graph& g, VertexSet s, VertexSet t, VertexSet excluded = {});

// Edge-by-edge validation, sharing no code with the searches above.
bool is_valid(const Graph& g, const TriCycleWitness& w);
bool is_valid(const Graph& g, const SwitchWitness& w);
bool is_valid(const Graph& g, const DumbbellWitness& w);
bool is_valid(const Graph& g, const PathWitness& w, VertexSet s, VertexSet t);

/// The cycle obtained by routing c_i -> apex -> c_{i+1}; one vertex longer.
std::vector<Vertex> reroute_through_apex(const TriCycleWitness& w);

}  // namespace pancycle
