#include "apnp/tie_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apnp {

namespace {

// Edge ids grouped by weight, ascending weight, ids ascending within a class.
std::vector<std::pair<Weight, std::vector<EdgeId>>> weight_classes(const Graph& g) {
  std::map<Weight, std::vector<EdgeId>> by_weight;
  for (const auto& e : g.edges()) by_weight[e.weight].push_back(e.id);
  return {by_weight.begin(), by_weight.end()};
}

struct Builder {
  Graph graph;
  ReductionMap map;
  Weight next_slot = 0;

  Builder(int n, bool directed) : graph(n, directed, true) {
    map.directed = directed;
    map.n = n;
  }

  void emit(VertexId u, VertexId v, Weight original, EdgeId into_dst, EdgeId into_src) {
    const Weight w = next_slot++;
    graph.add_edge(u, v, w);
    map.new_to_old_weight.emplace(w, original);
    map.original_into_dst.push_back(into_dst);
    map.original_into_src.push_back(into_src);
  }

  Reduction finish() {
    graph.set_multi(graph.has_parallel_edges());
    return Reduction{std::move(graph), std::move(map)};
  }
};

// Iterative Tarjan over the arcs of one class. comp[v] is the completion
// index of v's SCC (sinks complete first), -1 for untouched vertices.
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};

SccResult tarjan(int n, std::span<const VertexId> vertices, const std::vector<std::vector<VertexId>>& adj) {
  SccResult out;
  out.comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  int counter = 0;
  for (VertexId root : vertices) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto vu = static_cast<std::size_t>(v);
      if (next == 0) {
        index[vu] = low[vu] = counter++;
        stack.push_back(v);
        on_stack[vu] = 1;
      }
      if (next < adj[vu].size()) {
        const VertexId w = adj[vu][next++];
        const auto wu = static_cast<std::size_t>(w);
        if (index[wu] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[wu]) {
          low[vu] = std::min(low[vu], index[wu]);
        }
        continue;
      }
      if (low[vu] == index[vu]) {
        VertexId x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(x)] = 0;
          out.comp[static_cast<std::size_t>(x)] = out.count;
        } while (x != v);
        ++out.count;
      }
      const int finished_low = low[vu];
      call.pop_back();
      if (!call.empty()) {
        const auto pu = static_cast<std::size_t>(call.back().first);
        low[pu] = std::min(low[pu], finished_low);
      }
    }
  }
  return out;
}

}  // namespace

Reduction reduce_undirected(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("reduce_undirected: graph is directed");
  const auto nu = static_cast<std::size_t>(g.n());
  Builder builder(g.n(), false);
  std::vector<VertexId> parent(nu);
  std::vector<EdgeId> first_incident(nu, -1);
  std::size_t offset = 0;

  for (const auto& [w, ids] : weight_classes(g)) {
    WeightClass cls;
    cls.weight = w;
    cls.first_slot = static_cast<Weight>(2 * offset);
    cls.edge_count = ids.size();
    builder.next_slot = cls.first_slot;

    std::vector<VertexId> touched;
    for (auto id : ids) {
      const Edge& e = g.edge(id);
      for (VertexId v : {e.src, e.dst}) {
        auto& fi = first_incident[static_cast<std::size_t>(v)];
        if (fi < 0) {
          fi = id;
          touched.push_back(v);
          parent[static_cast<std::size_t>(v)] = v;
        }
      }
    }
    auto root = [&](VertexId v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        auto& p = parent[static_cast<std::size_t>(v)];
        p = parent[static_cast<std::size_t>(p)];
        v = p;
      }
      return v;
    };
    for (auto id : ids) {
      const Edge& e = g.edge(id);
      const VertexId a = root(e.src);
      const VertexId b = root(e.dst);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::sort(touched.begin(), touched.end());
    std::map<VertexId, std::size_t> comp_of_root;
    for (VertexId v : touched) {
      const VertexId r = root(v);
      auto [it, inserted] = comp_of_root.emplace(r, cls.components.size());
      if (inserted) cls.components.emplace_back();
      cls.components[it->second].push_back(v);
    }

    for (const auto& comp : cls.components) {
      const VertexId v1 = comp.front();
      cls.assembly.push_back(v1);
      auto rep = [&](VertexId v) { return first_incident[static_cast<std::size_t>(v)]; };
      for (std::size_t i = 1; i < comp.size(); ++i) builder.emit(v1, comp[i], w, rep(comp[i]), rep(v1));
      for (std::size_t i = comp.size() - 1; i >= 1; --i) builder.emit(comp[i], v1, w, rep(v1), rep(comp[i]));
    }
    for (VertexId v : touched) first_incident[static_cast<std::size_t>(v)] = -1;
    offset += ids.size();
    builder.map.classes.push_back(std::move(cls));
  }
  return builder.finish();
}

Reduction reduce_directed(const Graph& g) {
  if (!g.directed()) throw std::invalid_argument("reduce_directed: graph is undirected");
  const int n = g.n();
  const auto nu = static_cast<std::size_t>(n);
  Builder builder(n, true);
  std::vector<std::vector<VertexId>> adj(nu);
  std::vector<std::uint8_t> seen(nu, 0);
  // Lowest-id class edge entering v from inside v's SCC, -1 if none.
  std::vector<EdgeId> inner_in(nu, -1);
  std::size_t offset = 0;

  for (const auto& [w, ids] : weight_classes(g)) {
    WeightClass cls;
    cls.weight = w;
    cls.first_slot = static_cast<Weight>(2 * offset);
    cls.edge_count = ids.size();
    builder.next_slot = cls.first_slot;

    std::vector<VertexId> touched;
    for (auto id : ids) {
      const Edge& e = g.edge(id);
      for (VertexId v : {e.src, e.dst}) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          touched.push_back(v);
        }
      }
      adj[static_cast<std::size_t>(e.src)].push_back(e.dst);
    }
    std::sort(touched.begin(), touched.end());
    const SccResult scc = tarjan(n, touched, adj);
    auto comp = [&](VertexId v) { return scc.comp[static_cast<std::size_t>(v)]; };
    // Tarjan completes SCCs in reverse topological order.
    auto topo = [&](VertexId v) { return scc.count - 1 - comp(v); };

    // Components listed by topological position.
    cls.components.assign(static_cast<std::size_t>(scc.count), {});
    for (VertexId v : touched) cls.components[static_cast<std::size_t>(topo(v))].push_back(v);
    for (const auto& c : cls.components) cls.assembly.push_back(c.front());
    auto assembly_of = [&](VertexId v) { return cls.assembly[static_cast<std::size_t>(topo(v))]; };

    std::vector<EdgeId> dag;
    for (auto id : ids) {
      const Edge& e = g.edge(id);
      if (comp(e.src) == comp(e.dst)) {
        auto& in = inner_in[static_cast<std::size_t>(e.dst)];
        if (in < 0) in = id;
      } else {
        dag.push_back(id);
      }
    }
    std::stable_sort(dag.begin(), dag.end(), [&](EdgeId a, EdgeId b) { return topo(g.edge(a).src) < topo(g.edge(b).src); });

    for (const auto& c : cls.components) {
      const VertexId a = c.front();
      for (std::size_t i = 1; i < c.size(); ++i) builder.emit(c[i], a, w, inner_in[static_cast<std::size_t>(a)], -1);
    }
    for (auto id : dag) {
      const Edge& e = g.edge(id);
      const VertexId target = assembly_of(e.dst);
      const EdgeId inner = inner_in[static_cast<std::size_t>(target)];
      builder.emit(assembly_of(e.src), target, w, inner >= 0 ? inner : id, -1);
    }
    for (const auto& c : cls.components) {
      const VertexId a = c.front();
      for (std::size_t i = 1; i < c.size(); ++i) builder.emit(a, c[i], w, inner_in[static_cast<std::size_t>(c[i])], -1);
    }
    for (const auto& c : cls.components) {
      if (c.size() < 2) continue;
      for (VertexId v : c) builder.map.closed_walks.push_back({v, w, inner_in[static_cast<std::size_t>(v)]});
    }

    for (VertexId v : touched) {
      const auto vu = static_cast<std::size_t>(v);
      seen[vu] = 0;
      inner_in[vu] = -1;
      adj[vu].clear();
    }
    offset += ids.size();
    builder.map.classes.push_back(std::move(cls));
  }
  return builder.finish();
}

Reduction reduce(const Graph& g) { return g.directed() ? reduce_directed(g) : reduce_undirected(g); }

ApnpMatrix lift_answers(const ApnpMatrix& h_result, const Graph& reduced, const ReductionMap& map) {
  if (h_result.n() != map.n) throw std::invalid_argument("lift_answers: size mismatch");
  ApnpMatrix out(map.n);
  for (int i = 0; i < map.n; ++i) {
    for (int k = 0; k < map.n; ++k) {
      const auto w = h_result.opt(i, k);
      if (!w) continue;
      auto it = map.new_to_old_weight.find(*w);
      if (it == map.new_to_old_weight.end()) {
        throw std::out_of_range("lift_answers: unknown synthetic weight " + std::to_string(*w));
      }
      const auto h = static_cast<std::size_t>(*h_result.last_edge(i, k));
      const EdgeId last = reduced.edge(static_cast<EdgeId>(h)).dst == k ? map.original_into_dst.at(h)
                                                                         : map.original_into_src.at(h);
      out.set(i, k, it->second, last);
    }
  }
  for (const auto& cw : map.closed_walks) {
    const auto cur = out.opt(cw.vertex, cw.vertex);
    if (!cur || cw.weight < *cur) out.set(cw.vertex, cw.vertex, cw.weight, cw.last);
  }
  return out;
}

std::vector<Code> dedupe_parallel_min(const RankedGraph& rg, std::span<const Code> codes) {
  std::vector<Code> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end(), [&](Code a, Code b) {
    const Edge& ea = rg.edge_at(a);
    const Edge& eb = rg.edge_at(b);
    if (ea.src != eb.src) return ea.src < eb.src;
    if (ea.dst != eb.dst) return ea.dst < eb.dst;
    return a < b;
  });
  std::vector<Code> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) {
      const Edge& prev = rg.edge_at(sorted[i - 1]);
      const Edge& cur = rg.edge_at(sorted[i]);
      if (prev.src == cur.src && prev.dst == cur.dst) continue;
    }
    out.push_back(sorted[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apnp
