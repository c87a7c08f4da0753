#include "wpi/lattice.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wpi {

std::string MultiIndex::label() const {
  std::string s = "t";
  for (int e : entries) s += "_" + std::to_string(e);
  return s;
}

std::string MultiIndex::dotted() const {
  std::string s;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) s += ".";
    s += std::to_string(entries[k]);
  }
  return s;
}

static Ordering compare_rev_lex(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (a.entries[k] > b.entries[k]) return Ordering::Less;
    if (a.entries[k] < b.entries[k]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

Ordering compare(OrderTag order, const MultiIndex& a, const MultiIndex& b) {
  if (a.entries.size() != b.entries.size())
    throw std::invalid_argument("compare: multi-indices of different length");
  if (order.kappa < 0 || order.kappa > a.n())
    throw std::invalid_argument("compare: kappa out of range");
  if (order.kappa == 0) return compare_rev_lex(a, b);
  int ak = a.entries[order.kappa], bk = b.entries[order.kappa];
  if (ak < bk) return Ordering::Less;
  if (ak > bk) return Ordering::Greater;
  return compare_rev_lex(a, b);
}

std::vector<MultiIndex> build_index_set(int n, int d) {
  if (n < 0) throw std::invalid_argument("build_index_set: n must be >= 0");
  if (d < 1) throw std::invalid_argument("build_index_set: d must be >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur;
  cur.entries.assign(n + 1, 1);
  // Odometer over {1,2} x {1..3d-1}^n, then sort by prec_0.
  const int top = 3 * d - 1;
  while (true) {
    out.push_back(cur);
    int pos = n;
    while (pos >= 0) {
      int lim = (pos == 0) ? 2 : top;
      if (cur.entries[pos] < lim) {
        ++cur.entries[pos];
        break;
      }
      cur.entries[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return compare_rev_lex(a, b) == Ordering::Less;
  });
  return out;
}

std::vector<MultiIndex> enumerate_indices(int n, int d, OrderTag order) {
  auto out = build_index_set(n, d);
  if (order.kappa < 0 || order.kappa > n)
    throw std::invalid_argument("enumerate_indices: kappa out of range");
  std::stable_sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    return compare(order, a, b) == Ordering::Less;
  });
  return out;
}

bool is_edge(const MultiIndex& a, const MultiIndex& b) {
  if (a.entries.size() != b.entries.size())
    throw std::invalid_argument("is_edge: multi-indices of different length");
  if (a == b) return false;
  bool up = true, down = true;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    int diff = a.entries[k] - b.entries[k];
    if (diff != 0 && diff != 1) up = false;
    if (diff != 0 && diff != -1) down = false;
  }
  return up || down;
}

LatticeGraph build_graph(int n, int d) {
  LatticeGraph g;
  g.n = n;
  g.d = d;
  g.vertices = build_index_set(n, d);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (is_edge(g.vertices[i], g.vertices[j]))
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return g;
}

std::vector<std::array<int, 3>> triangles(const LatticeGraph& g) {
  const int m = static_cast<int>(g.vertices.size());
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = true;
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adj[i][j])
        for (int k = j + 1; k < m; ++k)
          if (adj[i][k] && adj[j][k]) out.push_back({i, j, k});
  return out;
}

GraphStats graph_stats(const LatticeGraph& g) {
  GraphStats s;
  s.vertex_count = g.vertices.size();
  s.edge_count = g.edges.size();
  std::vector<std::vector<int>> nbr(g.vertices.size());
  for (auto [i, j] : g.edges) {
    nbr[i].push_back(j);
    nbr[j].push_back(i);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::queue<int> q;
  if (!g.vertices.empty()) {
    q.push(0);
    seen[0] = true;
  }
  std::size_t reached = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++reached;
    for (int w : nbr[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  s.connected = reached == g.vertices.size();
  return s;
}

std::string graph_to_dot(const LatticeGraph& g) {
  std::ostringstream os;
  os << "graph Gamma_" << g.n << "_" << g.d << " {\n";
  for (const auto& v : g.vertices) os << "  \"" << v.dotted() << "\";\n";
  for (auto [i, j] : g.edges)
    os << "  \"" << g.vertices[i].dotted() << "\" -- \"" << g.vertices[j].dotted() << "\";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const LatticeGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["d"] = g.d;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) verts.push_back(v.entries);
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return j.dump(2);
}

}  // namespace wpi
