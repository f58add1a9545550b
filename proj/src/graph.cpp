#include "apnp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace apnp {

Graph::Graph(int n, bool directed, bool multi) : n_(n), directed_(directed), multi_(multi) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
}

EdgeId Graph::add_edge(VertexId src, VertexId dst, Weight weight) {
  if (src < 0 || dst < 0 || src >= n_ || dst >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (src == dst) throw std::invalid_argument("self-loops are not allowed");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{src, dst, weight, id});
  return id;
}

bool Graph::has_distinct_weights() const {
  std::vector<Weight> w;
  w.reserve(edges_.size());
  for (const auto& e : edges_) w.push_back(e.weight);
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

bool Graph::has_parallel_edges() const {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (const auto& e : edges_) {
    auto a = static_cast<std::uint64_t>(e.src);
    auto b = static_cast<std::uint64_t>(e.dst);
    if (!directed_ && a > b) std::swap(a, b);
    if (!seen.insert((a << 32) | b).second) return true;
  }
  return false;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.multi_ == b.multi_ && a.edges_ == b.edges_;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text, const ParseOptions& options) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // Blank lines are skipped; line numbers refer to the physical file.
  std::size_t li = 0;
  auto next_line = [&]() -> std::optional<std::pair<std::size_t, std::vector<std::string_view>>> {
    while (li < lines.size()) {
      auto toks = split_ws(lines[li]);
      ++li;
      if (!toks.empty()) return std::make_pair(li, std::move(toks));
    }
    return std::nullopt;
  };

  auto header = next_line();
  if (!header) throw ParseError(1, "missing header");
  const auto& h = header->second;
  if (h.size() < 3 || h.size() > 4) throw ParseError(header->first, "header must be `n m directed|undirected [multi]`");
  const auto n = parse_number<int>(h[0], header->first, "vertex count");
  const auto m = parse_number<long long>(h[1], header->first, "edge count");
  if (n < 0 || m < 0) throw ParseError(header->first, "negative size");
  bool directed;
  if (h[2] == "directed") {
    directed = true;
  } else if (h[2] == "undirected") {
    directed = false;
  } else {
    throw ParseError(header->first, "expected `directed` or `undirected`");
  }
  bool multi = false;
  if (h.size() == 4) {
    if (h[3] != "multi") throw ParseError(header->first, "unknown header flag '" + std::string(h[3]) + "'");
    multi = true;
  }

  Graph g(n, directed, multi);
  std::unordered_set<std::uint64_t> pairs;
  std::unordered_set<Weight> weights;
  for (long long e = 0; e < m; ++e) {
    auto line = next_line();
    if (!line) throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    const auto ln = line->first;
    const auto& t = line->second;
    if (t.size() != 3) throw ParseError(ln, "edge line must be `src dst weight`");
    const auto u = parse_number<VertexId>(t[0], ln, "source");
    const auto v = parse_number<VertexId>(t[1], ln, "destination");
    const auto w = parse_number<Weight>(t[2], ln, "weight");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(ln, "vertex id out of range");
    if (u == v) throw ParseError(ln, "self-loop");
    if (!multi) {
      auto a = static_cast<std::uint64_t>(u);
      auto b = static_cast<std::uint64_t>(v);
      if (!directed && a > b) std::swap(a, b);
      if (!pairs.insert((a << 32) | b).second) throw ParseError(ln, "parallel edge in a simple graph");
    }
    if (options.require_distinct && !weights.insert(w).second) {
      throw ParseError(ln, "duplicate weight " + std::to_string(w));
    }
    g.add_edge(u, v, w);
  }
  if (auto extra = next_line()) throw ParseError(extra->first, "more edge lines than declared");
  return g;
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + (g.directed() ? " directed" : " undirected");
  if (g.multi()) out += " multi";
  out += '\n';
  for (const auto& e : g.edges()) {
    out += std::to_string(e.src);
    out += ' ';
    out += std::to_string(e.dst);
    out += ' ';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

int code_bits(std::size_t m) {
  int b = 1;
  while ((std::size_t{1} << b) < m) ++b;
  return b;
}

RankedGraph rank_weights(Graph g) {
  const std::size_t m = g.m();
  RankedGraph rg;
  rg.edge_of_code_.resize(m);
  for (std::size_t i = 0; i < m; ++i) rg.edge_of_code_[i] = static_cast<EdgeId>(i);
  const auto edges = g.edges();
  std::sort(rg.edge_of_code_.begin(), rg.edge_of_code_.end(),
            [&](EdgeId a, EdgeId b) { return edges[static_cast<std::size_t>(a)].weight < edges[static_cast<std::size_t>(b)].weight; });
  for (std::size_t c = 1; c < m; ++c) {
    if (edges[static_cast<std::size_t>(rg.edge_of_code_[c])].weight ==
        edges[static_cast<std::size_t>(rg.edge_of_code_[c - 1])].weight) {
      throw std::invalid_argument("rank_weights: duplicate weight " +
                                  std::to_string(edges[static_cast<std::size_t>(rg.edge_of_code_[c])].weight) +
                                  " (apply the tie reduction first)");
    }
  }
  rg.code_of_edge_.resize(m);
  for (std::size_t c = 0; c < m; ++c) rg.code_of_edge_[static_cast<std::size_t>(rg.edge_of_code_[c])] = static_cast<Code>(c);
  rg.bits_ = code_bits(m);
  rg.graph_ = std::move(g);
  return rg;
}

// BitString

BitString BitString::from_code(Code code, int width) {
  if (width < 0 || width > 63) throw std::invalid_argument("bit width out of range");
  if (width < 32 && (static_cast<std::uint64_t>(code) >> width) != 0) {
    throw std::invalid_argument("code does not fit in width");
  }
  BitString s;
  s.bits_ = code;
  s.len_ = width;
  return s;
}

BitString BitString::parse(std::string_view bits) {
  if (bits.size() > 63) throw std::invalid_argument("bit string too long");
  BitString s;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit string must contain only 0 and 1");
    s = s.append(ch == '1');
  }
  return s;
}

bool BitString::bit(int i) const {
  if (i < 0 || i >= len_) throw std::out_of_range("bit index");
  return ((bits_ >> (len_ - 1 - i)) & 1U) != 0;
}

BitString BitString::prefix(int len) const {
  if (len < 0 || len > len_) throw std::out_of_range("prefix length");
  BitString s;
  s.bits_ = len == 0 ? 0 : bits_ >> (len_ - len);
  s.len_ = len;
  return s;
}

BitString BitString::append(bool bit) const {
  if (len_ >= 63) throw std::length_error("bit string too long");
  BitString s;
  s.bits_ = (bits_ << 1) | (bit ? 1U : 0U);
  s.len_ = len_ + 1;
  return s;
}

BitString BitString::concat(const BitString& tail) const {
  if (len_ + tail.len_ > 63) throw std::length_error("bit string too long");
  BitString s;
  s.bits_ = (tail.len_ == 0 ? bits_ : (bits_ << tail.len_)) | tail.bits_;
  s.len_ = len_ + tail.len_;
  return s;
}

bool BitString::has_prefix(const BitString& p) const {
  return p.len_ <= len_ && prefix(p.len_) == p;
}

std::string BitString::str() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(len_));
  for (int i = 0; i < len_; ++i) s.push_back(bit(i) ? '1' : '0');
  return s;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  const int common = std::min(a.len_, b.len_);
  const auto pa = a.prefix(common).bits_;
  const auto pb = b.prefix(common).bits_;
  if (pa != pb) return pa <=> pb;
  return a.len_ <=> b.len_;
}

BitString lcp(const BitString& a, const BitString& b) {
  int len = std::min(a.size(), b.size());
  while (len > 0 && a.prefix(len) != b.prefix(len)) --len;
  return a.prefix(len);
}

CodeRange code_interval(const BitString& prefix, int bits) {
  if (prefix.size() > bits) throw std::invalid_argument("prefix longer than code width");
  const int free = bits - prefix.size();
  const std::uint64_t lo = prefix.value() << free;
  const std::uint64_t hi = lo | ((std::uint64_t{1} << free) - 1);
  return CodeRange{static_cast<Code>(lo), static_cast<Code>(std::min<std::uint64_t>(hi, kNoCode - 1))};
}

}  // namespace apnp
