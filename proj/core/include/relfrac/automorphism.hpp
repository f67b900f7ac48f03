#pragma once

#include <optional>
#include <vector>

#include "relfrac/graph.hpp"

namespace relfrac {

// A permutation p with p[v] the image of v.
using Permutation = std::vector<int>;

// Individualization-refinement search for a bijection a -> b preserving
// adjacency both ways.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);

// An automorphism of g sending `from` to `to`, if one exists.
std::optional<Permutation> find_automorphism_mapping(const Graph& g, int from,
                                                     int to);

bool is_isomorphism(const Graph& a, const Graph& b, const Permutation& p);

// Uses the cached flag when available; otherwise searches and caches.
bool is_vertex_transitive(const Graph& g);

// For a vertex-transitive g: entry u is an automorphism sending 0 to u.
// Empty when g is not vertex-transitive.
std::vector<Permutation> transitive_transversal(const Graph& g);

// Elements of Aut(g) generated by `generators`, enumerated up to `cap`
// elements. Returns nullopt if the group is larger than the cap.
std::optional<std::vector<Permutation>> close_group(
    const std::vector<Permutation>& generators, int n, std::size_t cap);

// Rotations i -> i + r mod n when g is a cycle or a cyclic Cayley graph.
std::optional<std::vector<Permutation>> family_rotations(const Graph& g);

}  // namespace relfrac
