/*
  Equal-weight reduction.

  A graph whose weights repeat (or that carries parallel edges) is rewritten
  into a graph with globally distinct synthetic weights such that its APNP
  matrix, with weights mapped back, is the APNP matrix of the original under
  non-decreasing (<=) semantics.

  Per weight class w (classes in ascending weight order):
    undirected  each connected component {v1 < v2 < ... < vk} of G_w becomes
                (v1,v2) .. (v1,vk), (vk,v1) .. (v2,v1)
    directed    each SCC of G_w gets an assembly vertex a (its lowest id);
                emit every non-assembly v -> a, then one a_u -> a_v per edge
                between SCCs in topological order, then a -> every non-assembly v
  Class i owns the synthetic slots [2*offset_i, 2*offset_i + 2|E_w|), where
  offset_i counts the edges of lighter classes.
*/
#pragma once

#include <map>
#include <span>
#include <vector>

#include "apnp/graph.hpp"
#include "apnp/result.hpp"

namespace apnp {

struct WeightClass {
  Weight weight = 0;
  Weight first_slot = 0;
  std::size_t edge_count = 0;
  // Components (undirected) or SCCs (directed) touching at least one class
  // edge, each sorted ascending; assembly[c] is components[c].front().
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> assembly;
};

struct ReductionMap {
  bool directed = true;
  int n = 0;
  std::map<Weight, Weight> new_to_old_weight;
  std::vector<WeightClass> classes;
  // Per synthetic edge: an original edge of the same class entering the
  // synthetic edge's target (and, undirected only, its source) such that an
  // optimal walk in the original graph can end with it.
  std::vector<EdgeId> original_into_dst;
  std::vector<EdgeId> original_into_src;
  // Directed only: vertices on a cycle of a single class. Their closed walk
  // through the assembly vertex has no counterpart in the reduced graph.
  struct ClosedWalk {
    VertexId vertex;
    Weight weight;
    EdgeId last;
  };
  std::vector<ClosedWalk> closed_walks;
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

Reduction reduce_undirected(const Graph& g);
Reduction reduce_directed(const Graph& g);
Reduction reduce(const Graph& g);

// Throws std::out_of_range if an entry's weight is not a synthetic weight of `map`.
ApnpMatrix lift_answers(const ApnpMatrix& h_result, const Graph& reduced, const ReductionMap& map);

// Keeps the minimum code among edges sharing (src, dst). Output ascending.
std::vector<Code> dedupe_parallel_min(const RankedGraph& rg, std::span<const Code> codes);

}  // namespace apnp
