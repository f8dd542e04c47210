#include "pstlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {

Graph::Graph(int n, std::vector<std::uint8_t> adj, std::string name)
    : n_(n), adj_(std::move(adj)), name_(std::move(name)) {
  check_invariants();
}

void Graph::check_invariants() const {
  if (n_ < 1) throw invalid_input("graph needs at least one vertex");
  for (int i = 0; i < n_; ++i) {
    if (adj_[static_cast<std::size_t>(i) * n_ + i] != 0)
      throw invalid_input("nonzero diagonal at vertex " + std::to_string(i + 1));
    for (int j = 0; j < n_; ++j) {
      const std::uint8_t v = adj_[static_cast<std::size_t>(i) * n_ + j];
      if (v > 1) throw invalid_input("adjacency entries must be 0 or 1");
      if (v != adj_[static_cast<std::size_t>(j) * n_ + i])
        throw invalid_input("adjacency matrix not symmetric");
    }
  }
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name) {
  if (n < 1) throw invalid_input("vertex count must be positive, got " + std::to_string(n));
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw invalid_input("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          "): vertex index out of range [1, " + std::to_string(n) + "]");
    if (u == v)
      throw invalid_input("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is a self-loop");
    adj[static_cast<std::size_t>(u - 1) * n + (v - 1)] = 1;
    adj[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
  }
  return Graph(n, std::move(adj), std::move(name));
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

int Graph::edge_count() const {
  int m = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) m += adj0(i, j);
  return m;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw invalid_input("vertex index out of range [1, " + std::to_string(n_) + "]");
  return adj0(u - 1, v - 1);
}

int Graph::degree(int u) const {
  if (u < 1 || u > n_)
    throw invalid_input("vertex index out of range [1, " + std::to_string(n_) + "]");
  int d = 0;
  for (int j = 0; j < n_; ++j) d += adj0(u - 1, j);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj0(i, j)) out.emplace_back(i + 1, j + 1);
  return out;  // already lexicographic by construction
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = degree(i + 1);
  return d;
}

std::optional<int> Graph::regular_degree() const {
  const int k = degree(1);
  for (int u = 2; u <= n_; ++u)
    if (degree(u) != k) return std::nullopt;
  return k;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int start0) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{start0};
  dist[start0] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < g.order(); ++v)
      if (g.adj0(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool Graph::connected() const {
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> distance(const Graph& g, int i, int j) {
  if (i < 1 || i > g.order() || j < 1 || j > g.order())
    throw invalid_input("vertex index out of range [1, " + std::to_string(g.order()) + "]");
  const int d = bfs_distances(g, i - 1)[j - 1];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j) {
      const int a = (i - 1) * n2 + j;
      for (int l = j + 1; l <= n2; ++l)
        if (g2.adjacent(j, l)) edges.emplace_back(a, (i - 1) * n2 + l);
      for (int k = i + 1; k <= n1; ++k)
        if (g1.adjacent(i, k)) edges.emplace_back(a, (k - 1) * n2 + j);
    }
  return Graph::from_edge_list(n1 * n2, edges);
}

Graph power_product(const Graph& g, int k) {
  if (k < 1) throw invalid_input("power_product needs k >= 1, got " + std::to_string(k));
  Graph out = g;
  for (int i = 1; i < k; ++i) out = cartesian_product(out, g);
  return out;
}

Graph path(int n) {
  if (n < 1) throw invalid_input("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges, "P" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw invalid_input("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges, "C" + std::to_string(n));
}

Graph complete(int n) {
  if (n < 1) throw invalid_input("complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw invalid_input("complete_bipartite needs p, q >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) edges.emplace_back(i, p + j);
  return Graph::from_edge_list(p + q, edges, "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph parse_edge_list(std::istream& in, std::string name) {
  std::vector<std::string> data_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) data_lines.push_back(line);
  }
  if (data_lines.empty()) throw invalid_input("edge list is empty");

  std::istringstream head(data_lines.front());
  int n = 0;
  if (!(head >> n)) throw invalid_input("first data line must be the vertex count");
  std::string extra;
  if (head >> extra) throw invalid_input("first data line must hold only the vertex count");

  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < data_lines.size(); ++k) {
    std::istringstream row(data_lines[k]);
    int u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw invalid_input("malformed edge line: '" + data_lines[k] + "'");
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges, std::move(name));
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open graph file: " + path);
  return parse_edge_list(in, path);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::vector<long> six_cycle_counts(const Graph& g) {
  const int n = g.order();
  std::vector<long> count(n, 0);
  std::vector<int> walk;
  std::vector<char> used(n, 0);
  // 6-cycles anchored at their smallest vertex; each traversed in two
  // directions, so raw per-vertex tallies are halved at the end.
  auto extend = [&](auto&& self, int start, int cur, int depth) -> void {
    if (depth == 5) {
      if (g.adj0(cur, start)) {
        for (int v : walk) ++count[v];
      }
      return;
    }
    for (int next = start + 1; next < n; ++next) {
      if (!used[next] && g.adj0(cur, next)) {
        used[next] = 1;
        walk.push_back(next);
        self(self, start, next, depth + 1);
        walk.pop_back();
        used[next] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    walk.assign(1, s);
    extend(extend, s, s, 0);
    used[s] = 0;
  }
  for (long& c : count) c /= 2;
  std::sort(count.begin(), count.end());
  return count;
}

namespace {

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(g.order(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v = 0; v < g.order(); ++v)
        if (g.adj0(u, v) && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  return order;
}

}  // namespace

bool isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degree_sequence();
  auto dh = h.degree_sequence();
  {
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  // Map vertices of g in BFS order so every new vertex (after the first of a
  // component) is constrained by at least one already-mapped neighbour.
  const std::vector<int> order = bfs_order(g);
  std::vector<int> map_gh(n, -1), used_h(n, 0);

  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    const int u = order[pos];
    for (int cand = 0; cand < n; ++cand) {
      if (used_h[cand] || dh[cand] != dg[u]) continue;
      bool ok = true;
      for (int q = 0; q < pos; ++q) {
        const int w = order[q];
        if (g.adj0(u, w) != h.adj0(cand, map_gh[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_gh[u] = cand;
      used_h[cand] = 1;
      if (self(self, pos + 1)) return true;
      used_h[cand] = 0;
      map_gh[u] = -1;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (!g.adj0(u, v)) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v + 1);
  return std::make_pair(std::move(a), std::move(b));
}

}  // namespace pstlab
