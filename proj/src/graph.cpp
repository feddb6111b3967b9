#include "vramsey/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "vramsey/error.hpp"

namespace vramsey {

namespace {

// Keeps the adjacency bit matrix within a few tens of megabytes.
constexpr int kMaxOrder = 20000;

void check_order(long long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > kMaxOrder)
    throw Error(ErrorCode::TooLarge,
                "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  build({});
}

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  n_ = n;
  build(std::vector<Edge>(edges.begin(), edges.end()));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  check_order(n);
  n_ = n;
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::MalformedInput, "loop at vertex " + std::to_string(a));
    list.emplace_back(a, b);
  }
  build(std::move(list));
}

void Graph::build(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_)
      throw Error(ErrorCode::InvalidVertex, "edge endpoint out of range 0.." + std::to_string(n_ - 1));
    if (e.u == e.v) throw Error(ErrorCode::MalformedInput, "loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    bits_[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    bits_[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& l) { return l.empty(); });
}

VertexColoring VertexColoring::from_colors(std::vector<int> colors) {
  VertexColoring c;
  std::set<int> distinct(colors.begin(), colors.end());
  c.palette_size = static_cast<int>(distinct.size());
  c.colors = std::move(colors);
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= g.order())
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " not in graph");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int v : sorted)
    for (int w : g.neighbors(v))
      if (v < w && index[w] >= 0) edges.emplace_back(index[v], index[w]);
  return {Graph(static_cast<int>(sorted.size()), edges), std::move(sorted)};
}

InducedSubgraph edge_subgraph(const Graph& g, std::span<const Edge> edges,
                              std::span<const int> extra_vertices) {
  std::vector<int> vertices(extra_vertices.begin(), extra_vertices.end());
  for (const Edge& e : edges) {
    if (e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw Error(ErrorCode::InvalidArgument, "edge is not in the graph");
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order())
      throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(vertices[i]) + " not in graph");
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(edges.size());
  for (const Edge& e : edges) relabeled.emplace_back(index[e.u], index[e.v]);
  return {Graph(static_cast<int>(vertices.size()), relabeled), std::move(vertices)};
}

// graph6: N(n) header, then the upper triangle in column order (x(0,1),
// x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorCode::MalformedInput, "empty graph6 string");
  for (char ch : text)
    if (ch < 63 || ch > 126)
      throw Error(ErrorCode::MalformedInput, "graph6 character out of range");

  long long n = 0;
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (text.size() < pos + count) throw Error(ErrorCode::MalformedInput, "truncated graph6 header");
    long long value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | (text[pos + i] - 63);
    pos += count;
    return value;
  };
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  check_order(n);

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::string_view payload = text.substr(pos);
  if (payload.size() < need)
    throw Error(ErrorCode::MalformedInput, "graph6 payload truncated: need " + std::to_string(need) +
                                               " bytes, have " + std::to_string(payload.size()));
  if (payload.size() > need) throw Error(ErrorCode::MalformedInput, "graph6 payload too long");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = payload[k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = payload[k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1))
      throw Error(ErrorCode::MalformedInput, "nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  long long declared = -1;
  long long max_id = -1;
  std::vector<Edge> edges;
  bool first_content = true;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (first_content && line.starts_with("n=")) {
      std::string_view num = trim(line.substr(2));
      long long value = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
      if (ec != std::errc() || ptr != num.data() + num.size() || value < 0)
        throw Error(ErrorCode::MalformedInput, where + "bad vertex count");
      check_order(value);
      declared = value;
      first_content = false;
      continue;
    }
    first_content = false;

    long long ends[2];
    std::string_view rest = line;
    for (long long& end : ends) {
      rest = trim(rest);
      const auto stop = rest.find_first_of(" \t");
      std::string_view token = rest.substr(0, stop);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), end);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || end < 0)
        throw Error(ErrorCode::MalformedInput, where + "expected two non-negative integers");
      rest.remove_prefix(token.size());
    }
    if (!trim(rest).empty()) throw Error(ErrorCode::MalformedInput, where + "trailing tokens");
    if (ends[0] == ends[1]) throw Error(ErrorCode::MalformedInput, where + "loop edge");
    check_order(std::max(ends[0], ends[1]) + 1);
    max_id = std::max({max_id, ends[0], ends[1]});
    edges.emplace_back(static_cast<int>(ends[0]), static_cast<int>(ends[1]));
  }
  if (declared >= 0 && max_id >= declared)
    throw Error(ErrorCode::InvalidVertex, "vertex id " + std::to_string(max_id) +
                                              " not below declared count " + std::to_string(declared));
  const long long n = declared >= 0 ? declared : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) return parse_edge_list(t);
  const char first = t.front();
  if ((first >= '0' && first <= '9') || first == '#' || t.starts_with("n=")) return parse_edge_list(t);
  return parse_graph6(t);
}

}  // namespace vramsey
