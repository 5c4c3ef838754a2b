#pragma once

// Brute-force reference implementations. They only use Graph::order and
// Graph::adjacent, never the library's search code, so agreement between the
// two is evidence rather than tautology.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pancycle/graph.hpp"

namespace oracle {

using pancycle::Graph;
using pancycle::Vertex;

std::vector<std::vector<bool>> matrix(const Graph& g);

int induced_edges(const Graph& g, const std::vector<Vertex>& s);

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<Vertex>> subsets(int n, int k);

struct StResult {
    bool holds = true;
    int min_size = INT32_MAX;
    std::optional<std::vector<Vertex>> first_violation;
};
StResult st_condition(const Graph& g, int s, int t);

int independence_number(const Graph& g);
bool connected(const Graph& g, const std::vector<bool>& removed = {});
bool two_connected(const Graph& g);
int min_degree(const Graph& g);

// Every simple cycle as a vertex sequence starting at its smallest vertex,
// once in each orientation.
std::vector<std::vector<Vertex>> all_cycles(const Graph& g);
std::set<int> cycle_lengths(const Graph& g);

bool has_c_tilde(const Graph& g, int l);

struct SwitchKey {
    int t = 0;
    int s = 0;
    int nbr = 0;  // smallest 1-based index of a path neighbour of v_{l+1}
    friend bool operator==(const SwitchKey&, const SwitchKey&) = default;
};
bool better(const SwitchKey& a, const SwitchKey& b);  // t asc, then s desc, then nbr asc
// Best key over all switches whose path has l edges.
std::optional<SwitchKey> best_switch(const Graph& g, int l);
SwitchKey switch_key(const Graph& g, const std::vector<Vertex>& path, Vertex y, int t, int s);

// Shortest (S,T)-path length by enumerating simple paths; -1 when none.
int shortest_st_path(const Graph& g, const std::vector<bool>& s, const std::vector<bool>& t,
                     const std::vector<bool>& excluded);

bool has_triangle(const Graph& g);

Graph random_graph(int n, double p, std::mt19937_64& rng);

// Canonical stream from the vendored generator (path baked in at build time).
std::vector<std::string> geng(const std::string& args);
std::string geng_path();

}  // namespace oracle
