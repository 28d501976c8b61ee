// Copyright 2026 The lcz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lcz/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "lcz/rng.hpp"

namespace lcz {

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  adj_.assign(n, {});
  adj_edge_.assign(n, {});
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of range for n=" + std::to_string(n));
    if (i == j) throw std::invalid_argument("self-loop at node " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    edges_.push_back({i, j});
  }
  for (int e = 0; e < num_edges(); ++e) {
    auto [i, j] = edges_[e];
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (int v = 0; v < n; ++v) std::sort(adj_[v].begin(), adj_[v].end());
  for (int v = 0; v < n; ++v) {
    adj_edge_[v].resize(adj_[v].size());
  }
  for (int e = 0; e < num_edges(); ++e) {
    auto [i, j] = edges_[e];
    auto pi = std::lower_bound(adj_[i].begin(), adj_[i].end(), j) - adj_[i].begin();
    auto pj = std::lower_bound(adj_[j].begin(), adj_[j].end(), i) - adj_[j].begin();
    adj_edge_[i][pi] = e;
    adj_edge_[j][pj] = e;
  }
}

int UndirectedGraph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
  return d;
}

bool UndirectedGraph::has_edge(int i, int j) const { return edge_index(i, j) >= 0; }

int UndirectedGraph::edge_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) return -1;
  const auto& a = adj_[i];
  auto it = std::lower_bound(a.begin(), a.end(), j);
  if (it == a.end() || *it != j) return -1;
  return adj_edge_[i][it - a.begin()];
}

bool UndirectedGraph::is_regular(int d) const {
  return std::all_of(adj_.begin(), adj_.end(), [d](const auto& a) { return static_cast<int>(a.size()) == d; });
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_id(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected integer, got '" + tok + "'");
  if (v < 0) throw ParseError(line, "negative node id " + tok);
  return v;
}

}  // namespace

UndirectedGraph parse_edge_list(const std::string& text) {
  struct Row {
    int line;
    long long a, b;
  };
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected two integers");
    rows.push_back({lineno, parse_id(tok[0], lineno), parse_id(tok[1], lineno)});
  }
  if (rows.empty()) return UndirectedGraph(0, {});

  // A first line counts as the "N M" header when exactly M edge lines follow
  // and M fits in a simple graph on N nodes.
  const long long hn = rows.front().a, hm = rows.front().b;
  bool header = static_cast<long long>(rows.size()) - 1 == hm && hm <= hn * (hn - 1) / 2;
  long long declared_n = -1;
  std::size_t first = 0;
  if (header) {
    declared_n = rows.front().a;
    first = 1;
  }

  std::set<std::pair<long long, long long>> seen;
  long long max_id = -1;
  std::set<long long> ids;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.a == row.b) throw ParseError(row.line, "self-loop at node " + std::to_string(row.a));
    if (declared_n >= 0 && (row.a >= declared_n || row.b >= declared_n))
      throw ParseError(row.line, "node id " + std::to_string(std::max(row.a, row.b)) +
                                     " >= declared n=" + std::to_string(declared_n));
    auto key = std::minmax(row.a, row.b);
    if (!seen.insert({key.first, key.second}).second)
      throw ParseError(row.line, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    max_id = std::max({max_id, row.a, row.b});
    ids.insert(row.a);
    ids.insert(row.b);
  }

  std::vector<Edge> edges;
  edges.reserve(rows.size());
  if (declared_n >= 0 || static_cast<long long>(ids.size()) == max_id + 1) {
    long long n = declared_n >= 0 ? declared_n : max_id + 1;
    if (n > (1LL << 30)) throw ParseError(0, "node count too large");
    for (std::size_t r = first; r < rows.size(); ++r)
      edges.push_back({static_cast<int>(rows[r].a), static_cast<int>(rows[r].b)});
    return UndirectedGraph(static_cast<int>(n), std::move(edges));
  }

  // Sparse ids: remap in ascending order and keep the mapping.
  std::map<long long, int> remap;
  std::vector<long long> labels(ids.begin(), ids.end());
  for (std::size_t k = 0; k < labels.size(); ++k) remap[labels[k]] = static_cast<int>(k);
  for (std::size_t r = first; r < rows.size(); ++r) edges.push_back({remap[rows[r].a], remap[rows[r].b]});
  UndirectedGraph g(static_cast<int>(labels.size()), std::move(edges));
  g.set_labels(std::move(labels));
  return g;
}

std::string write_edge_list(const UndirectedGraph& g) {
  std::ostringstream os;
  os << g.num_nodes() << ' ' << g.num_edges() << '\n';
  const auto& lab = g.labels();
  for (auto [i, j] : g.edges()) {
    if (lab.empty())
      os << i << ' ' << j << '\n';
    else
      os << lab[i] << ' ' << lab[j] << '\n';
  }
  return os.str();
}

UndirectedGraph generate_random_regular(int n, int d, std::uint64_t seed, int max_retries) {
  if (n <= 0 || d < 0) throw std::invalid_argument("random regular: need n > 0, d >= 0");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw std::invalid_argument("random regular: n*d must be even");
  if (d >= n) throw std::invalid_argument("random regular: need d < n");
  Rng rng = substream(seed, "graph-gen");
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) points[static_cast<std::size_t>(v) * d + k] = v;
    rng.shuffle(points);
    std::set<Edge> es;
    bool ok = true;
    for (std::size_t p = 0; p + 1 < points.size(); p += 2) {
      int a = points[p], b = points[p + 1];
      if (a == b) {
        ok = false;
        break;
      }
      if (!es.insert(std::minmax(a, b)).second) {
        ok = false;
        break;
      }
    }
    if (ok) return UndirectedGraph(n, std::vector<Edge>(es.begin(), es.end()));
  }
  throw ResourceError("random regular: rejection cap of " + std::to_string(max_retries) + " retries exceeded");
}

UndirectedGraph generate_random_connected(int n, double extra_p, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("random connected: need n > 0");
  Rng rng = substream(seed, "graph-gen");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::set<Edge> es;
  for (int k = 1; k < n; ++k) {
    int parent = perm[rng.below(k)];
    es.insert(std::minmax(perm[k], parent));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!es.count({i, j}) && rng.uniform() < extra_p) es.insert({i, j});
  return UndirectedGraph(n, std::vector<Edge>(es.begin(), es.end()));
}

UndirectedGraph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return UndirectedGraph(n, e);
}

UndirectedGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, e);
}

UndirectedGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return UndirectedGraph(n, e);
}

UndirectedGraph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int k = 1; k <= leaves; ++k) e.push_back({0, k});
  return UndirectedGraph(leaves + 1, e);
}

UndirectedGraph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return UndirectedGraph(10, e);
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const std::vector<int>& nodes) {
  std::vector<int> pos(g.num_nodes(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) pos[nodes[k]] = static_cast<int>(k);
  std::vector<Edge> e;
  for (auto [i, j] : g.edges())
    if (pos[i] >= 0 && pos[j] >= 0) e.push_back({pos[i], pos[j]});
  return UndirectedGraph(static_cast<int>(nodes.size()), e);
}

std::vector<int> bfs_distances(const UndirectedGraph& g, int src) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

int count_components(const UndirectedGraph& g) {
  std::vector<int> seen(g.num_nodes(), 0);
  int comps = 0;
  for (int s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
    }
  }
  return comps;
}

bool is_connected(const UndirectedGraph& g) { return g.num_nodes() > 0 && count_components(g) == 1; }

bool is_biconnected(const UndirectedGraph& g) {
  if (!is_connected(g) || g.num_nodes() < 3) return false;
  auto dec = biconnected_components(g);
  return dec.bridges.empty() && dec.blocks.size() == 1;
}

int girth(const UndirectedGraph& g) {
  int best = 0;
  for (int s = 0; s < g.num_nodes(); ++s) {
    std::vector<int> dist(g.num_nodes(), -1), par(g.num_nodes(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push(w);
        } else if (par[v] != w) {
          int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

BlockDecomposition biconnected_components(const UndirectedGraph& g) {
  const int n = g.num_nodes();
  int comps = count_components(g);
  if (comps != 1) throw std::invalid_argument("graph is disconnected (" + std::to_string(comps) + " components)");
  BlockDecomposition dec;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_art(n, 0);
  std::vector<Edge> estack;
  int timer = 0;

  struct Frame {
    int v, parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> st;
  st.push_back({0, -1, 0, 0});
  disc[0] = low[0] = timer++;
  auto pop_component = [&](int u, int v) {
    std::vector<Edge> comp;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      comp.push_back(e);
      if (e == Edge{u, v}) break;
    }
    if (comp.size() == 1) {
      dec.bridges.push_back({std::min(comp[0].first, comp[0].second), std::max(comp[0].first, comp[0].second)});
    } else {
      std::set<int> nodes;
      for (auto& e : comp) {
        nodes.insert(e.first);
        nodes.insert(e.second);
        if (e.first > e.second) std::swap(e.first, e.second);
      }
      std::sort(comp.begin(), comp.end());
      dec.blocks.emplace_back(nodes.begin(), nodes.end());
      dec.block_edges.push_back(comp);
    }
  };
  while (!st.empty()) {
    Frame& f = st.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      int w = nb[f.next++];
      if (disc[w] < 0) {
        estack.push_back({f.v, w});
        disc[w] = low[w] = timer++;
        f.children++;
        st.push_back({w, f.v, 0, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        estack.push_back({f.v, w});
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      Frame done = f;
      st.pop_back();
      if (!st.empty()) {
        Frame& p = st.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (low[done.v] >= disc[p.v]) {
          if (p.parent >= 0) is_art[p.v] = 1;
          pop_component(p.v, done.v);
        }
      } else if (done.children > 1) {
        is_art[done.v] = 1;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (is_art[v]) dec.articulation_nodes.push_back(v);
  std::sort(dec.bridges.begin(), dec.bridges.end());
  // Canonical block order: by smallest edge.
  std::vector<std::size_t> idx(dec.blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return dec.block_edges[a] < dec.block_edges[b]; });
  BlockDecomposition sorted;
  sorted.bridges = dec.bridges;
  sorted.articulation_nodes = dec.articulation_nodes;
  for (auto k : idx) {
    sorted.blocks.push_back(dec.blocks[k]);
    sorted.block_edges.push_back(dec.block_edges[k]);
  }
  const int nb = static_cast<int>(sorted.blocks.size());
  for (int a : sorted.articulation_nodes) {
    for (int b = 0; b < nb; ++b)
      if (std::binary_search(sorted.blocks[b].begin(), sorted.blocks[b].end(), a))
        sorted.block_cut_tree.push_back({b, a});
    for (std::size_t k = 0; k < sorted.bridges.size(); ++k)
      if (sorted.bridges[k].first == a || sorted.bridges[k].second == a)
        sorted.block_cut_tree.push_back({nb + static_cast<int>(k), a});
  }
  std::sort(sorted.block_cut_tree.begin(), sorted.block_cut_tree.end());
  return sorted;
}

std::vector<int> combine_block_solutions(const UndirectedGraph& g, const BlockDecomposition& dec,
                                         const std::vector<std::vector<int>>& per_block) {
  const int n = g.num_nodes();
  if (per_block.size() != dec.blocks.size()) throw std::invalid_argument("one assignment per block required");
  for (std::size_t b = 0; b < dec.blocks.size(); ++b)
    if (per_block[b].size() != dec.blocks[b].size())
      throw std::invalid_argument("assignment for block " + std::to_string(b) + " misses block nodes");
  const int nb = static_cast<int>(dec.blocks.size());
  const int nc = nb + static_cast<int>(dec.bridges.size());
  std::vector<std::vector<int>> node_comps(n);
  for (int b = 0; b < nb; ++b)
    for (int v : dec.blocks[b]) node_comps[v].push_back(b);
  for (std::size_t k = 0; k < dec.bridges.size(); ++k) {
    node_comps[dec.bridges[k].first].push_back(nb + static_cast<int>(k));
    node_comps[dec.bridges[k].second].push_back(nb + static_cast<int>(k));
  }
  std::vector<int> bits(n, -1);
  std::vector<char> done(nc, 0);
  std::queue<int> q;
  if (n == 0) return {};
  // Node 0 is the smallest id, so it sits first in any block containing it.
  bits[0] = !node_comps[0].empty() && node_comps[0][0] < nb ? per_block[node_comps[0][0]][0] : 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int c : node_comps[u]) {
      if (done[c]) continue;
      done[c] = 1;
      if (c < nb) {
        const auto& nodes = dec.blocks[c];
        auto pos = std::lower_bound(nodes.begin(), nodes.end(), u) - nodes.begin();
        int flip = per_block[c][pos] != bits[u];
        for (std::size_t k = 0; k < nodes.size(); ++k) {
          int v = nodes[k];
          if (bits[v] < 0) {
            bits[v] = per_block[c][k] ^ flip;
            q.push(v);
          }
        }
      } else {
        auto [a, b] = dec.bridges[c - nb];
        int v = a == u ? b : a;
        if (bits[v] < 0) {
          bits[v] = 1 - bits[u];
          q.push(v);
        }
      }
    }
  }
  return bits;
}

CycleCount count_simple_cycles(const UndirectedGraph& g, std::uint64_t cap) {
  // Each cycle is enumerated from its smallest node in both directions.
  const int n = g.num_nodes();
  CycleCount out;
  std::uint64_t twice = 0;
  const std::uint64_t limit = cap > UINT64_MAX / 2 ? UINT64_MAX : cap * 2;
  std::vector<char> on_path(n, 0);
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int s = 0; s < n && !out.exceeded; ++s) {
    std::vector<Frame> st{{s, 0}};
    on_path[s] = 1;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next >= nb.size()) {
        on_path[f.v] = 0;
        st.pop_back();
        continue;
      }
      int w = nb[f.next++];
      if (w == s && st.size() >= 3) {
        if (++twice >= limit) {
          out.exceeded = true;
          break;
        }
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        st.push_back({w, 0});
      }
    }
    std::fill(on_path.begin(), on_path.end(), 0);
  }
  out.count = out.exceeded ? cap : twice / 2;
  return out;
}

}  // namespace lcz
