#include "apnp/result.hpp"

#include <sstream>
#include <stdexcept>

namespace apnp {

ApnpMatrix::ApnpMatrix(int n)
    : n_(n),
      weight_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
      last_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1) {}

std::optional<Weight> ApnpMatrix::opt(int i, int k) const {
  const auto idx = index(i, k);
  if (last_[idx] < 0) return std::nullopt;
  return weight_[idx];
}

std::optional<EdgeId> ApnpMatrix::last_edge(int i, int k) const {
  const auto idx = index(i, k);
  if (last_[idx] < 0) return std::nullopt;
  return last_[idx];
}

std::size_t ApnpMatrix::entries() const {
  std::size_t count = 0;
  for (auto e : last_) count += e >= 0 ? 1 : 0;
  return count;
}

void ApnpMatrix::set(int i, int k, Weight w, EdgeId last) {
  if (last < 0) throw std::invalid_argument("last edge id must be >= 0");
  const auto idx = index(i, k);
  weight_[idx] = w;
  last_[idx] = last;
}

void ApnpMatrix::clear(int i, int k) {
  const auto idx = index(i, k);
  weight_[idx] = 0;
  last_[idx] = -1;
}

std::string emit_result(const ApnpMatrix& r, bool dense) {
  std::string out;
  for (int i = 0; i < r.n(); ++i) {
    for (int k = 0; k < r.n(); ++k) {
      const auto w = r.opt(i, k);
      if (!w && !dense) continue;
      out += std::to_string(i);
      out += ' ';
      out += std::to_string(k);
      out += ' ';
      out += w ? std::to_string(*w) : std::string("inf");
      out += '\n';
    }
  }
  return out;
}

namespace {

VertexId previous_vertex(const Graph& g, const Edge& e, int k) {
  if (g.directed()) return e.src;
  return e.dst == k ? e.src : e.dst;
}

}  // namespace

std::vector<EdgeId> reconstruct_path(const ApnpMatrix& r, const Graph& g, int i, int k) {
  if (!r.present(i, k)) throw std::out_of_range("no non-decreasing path for this pair");
  std::vector<EdgeId> reversed;
  int cur = k;
  Weight bound = *r.opt(i, k);
  // Each step moves to a pair whose optimum is <= the edge just appended, and
  // off the diagonal the optimum strictly drops, so m + 2 steps is a safe cap.
  for (std::size_t steps = 0; steps <= g.m() + 2; ++steps) {
    const auto eid = r.last_edge(i, cur);
    if (!eid) throw std::logic_error("broken last-edge chain");
    const Edge& e = g.edge(*eid);
    if (e.weight > bound || (g.directed() ? e.dst != cur : (e.dst != cur && e.src != cur))) {
      throw std::logic_error("last edge inconsistent with the recorded optimum");
    }
    reversed.push_back(*eid);
    const int prev = previous_vertex(g, e, cur);
    if (prev == i) {
      return {reversed.rbegin(), reversed.rend()};
    }
    bound = e.weight;
    cur = prev;
  }
  throw std::logic_error("last-edge chain does not terminate");
}

bool is_nondecreasing_walk(const Graph& g, const std::vector<EdgeId>& path, int i, int k) {
  if (path.empty()) return false;
  int at = i;
  Weight last = 0;
  for (std::size_t p = 0; p < path.size(); ++p) {
    if (path[p] < 0 || static_cast<std::size_t>(path[p]) >= g.m()) return false;
    const Edge& e = g.edge(path[p]);
    if (p > 0 && e.weight < last) return false;
    if (e.src == at) {
      at = e.dst;
    } else if (!g.directed() && e.dst == at) {
      at = e.src;
    } else {
      return false;
    }
    last = e.weight;
  }
  return at == k;
}

std::string describe_difference(const ApnpMatrix& a, const ApnpMatrix& b) {
  if (a.n() != b.n()) return "size " + std::to_string(a.n()) + " vs " + std::to_string(b.n());
  auto show = [](const ApnpMatrix& m, int i, int k) {
    std::ostringstream os;
    if (auto w = m.opt(i, k)) {
      os << *w << " via e" << *m.last_edge(i, k);
    } else {
      os << "inf";
    }
    return os.str();
  };
  for (int i = 0; i < a.n(); ++i) {
    for (int k = 0; k < a.n(); ++k) {
      if (a.opt(i, k) != b.opt(i, k) || a.last_edge(i, k) != b.last_edge(i, k)) {
        return "(" + std::to_string(i) + "," + std::to_string(k) + "): " + show(a, i, k) + " vs " + show(b, i, k);
      }
    }
  }
  return {};
}

}  // namespace apnp
