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


#include "lcz/orientation.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <queue>
#include <sstream>

namespace lcz {

namespace {

// Kahn's algorithm with smallest-id tie-breaking; empty result when cyclic.
std::vector<int> kahn_order(int n, const std::vector<Arc>& arcs) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& a : arcs) {
    out[a.tail].push_back(a.head);
    indeg[a.head]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

void check_arcs(const UndirectedGraph& g, const std::vector<Arc>& arcs) {
  if (static_cast<int>(arcs.size()) != g.num_edges()) throw std::invalid_argument("one arc per edge required");
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [i, j] = g.edges()[e];
    const Arc& a = arcs[e];
    if (!((a.tail == i && a.head == j) || (a.tail == j && a.head == i)))
      throw std::invalid_argument("arc " + std::to_string(e) + " does not match its edge");
  }
}

}  // namespace

OrientedDag::OrientedDag(UndirectedGraph g, std::vector<Arc> arcs, std::vector<int> order)
    : g_(std::move(g)), arcs_(std::move(arcs)), order_(std::move(order)) {
  check_arcs(g_, arcs_);
  const int n = g_.num_nodes();
  if (order_.empty()) {
    order_ = kahn_order(n, arcs_);
    if (static_cast<int>(order_.size()) != n) throw std::invalid_argument("orientation contains a directed cycle");
  } else {
    if (static_cast<int>(order_.size()) != n) throw std::invalid_argument("order is not a permutation");
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
      int v = order_[k];
      if (v < 0 || v >= n || pos[v] >= 0) throw std::invalid_argument("order is not a permutation");
      pos[v] = k;
    }
    for (const auto& a : arcs_)
      if (pos[a.tail] >= pos[a.head])
        throw std::invalid_argument("order places head " + std::to_string(a.head) + " before tail " +
                                    std::to_string(a.tail));
  }
  in_.assign(n, {});
  out_.assign(n, {});
  for (const auto& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(in_[v].begin(), in_[v].end());
    std::sort(out_[v].begin(), out_[v].end());
    if (in_[v].empty()) sources_.push_back(v);
    if (out_[v].empty()) sinks_.push_back(v);
  }
}

bool OrientedDag::has_arc(int tail, int head) const {
  if (tail < 0 || tail >= num_nodes()) return false;
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

std::vector<int> OrientedDag::positions() const {
  std::vector<int> pos(num_nodes());
  for (int k = 0; k < num_nodes(); ++k) pos[order_[k]] = k;
  return pos;
}

OrientedDag OrientedDag::reversed() const {
  std::vector<Arc> r;
  r.reserve(arcs_.size());
  for (const auto& a : arcs_) r.push_back({a.head, a.tail});
  std::vector<int> ord(order_.rbegin(), order_.rend());
  return OrientedDag(g_, std::move(r), std::move(ord));
}

OrientationReport validate_orientation(const UndirectedGraph& g, const std::vector<Arc>& arcs) {
  check_arcs(g, arcs);
  OrientationReport rep;
  rep.acyclic = !kahn_order(g.num_nodes(), arcs).empty() || g.num_nodes() == 0;
  if (!rep.acyclic) return rep;
  std::vector<int> indeg(g.num_nodes(), 0), outdeg(g.num_nodes(), 0);
  for (const auto& a : arcs) {
    outdeg[a.tail]++;
    indeg[a.head]++;
  }
  for (int v = 0; v < g.num_nodes(); ++v) {
    rep.n_plus += indeg[v] == 0;
    rep.n_minus += outdeg[v] == 0;
  }
  return rep;
}

OrientationReport validate_bipolar(const OrientedDag& dag) { return validate_orientation(dag.base(), dag.arcs()); }

std::vector<std::vector<int>> lightcone_layers(const UndirectedGraph& g, int root) {
  const int n = g.num_nodes();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  if (!is_connected(g)) throw std::invalid_argument("light-cone orientation needs a connected graph");
  std::vector<std::vector<int>> tuple(n);
  std::vector<int> member(n, 0), dist(n, -1);
  int stamp = 0;
  // Work items: (component nodes, sub-root). Components are BFS-layered from
  // their smallest node; each layer's induced components recurse.
  std::vector<std::vector<int>> work(1, std::vector<int>(n));
  std::iota(work[0].begin(), work[0].end(), 0);
  bool first = true;
  while (!work.empty()) {
    std::vector<int> comp = std::move(work.back());
    work.pop_back();
    if (comp.size() == 1) continue;
    ++stamp;
    for (int v : comp) member[v] = stamp;
    int r = first ? root : *std::min_element(comp.begin(), comp.end());
    first = false;
    std::vector<std::vector<int>> layers;
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    std::vector<int> touched{r};
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (static_cast<int>(layers.size()) <= dist[v]) layers.emplace_back();
      layers[dist[v]].push_back(v);
      for (int w : g.neighbors(v))
        if (member[w] == stamp && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          touched.push_back(w);
          q.push(w);
        }
    }
    for (int v : touched) dist[v] = -1;
    for (int d = 0; d < static_cast<int>(layers.size()); ++d) {
      for (int v : layers[d]) tuple[v].push_back(d);
      // Connected components of the layer's induced subgraph.
      ++stamp;
      for (int v : layers[d]) member[v] = stamp;
      std::vector<int> sorted = layers[d];
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::vector<int>> subs;
      for (int v0 : sorted) {
        if (member[v0] != stamp) continue;
        std::vector<int> sub;
        std::vector<int> st{v0};
        member[v0] = -stamp;
        while (!st.empty()) {
          int v = st.back();
          st.pop_back();
          sub.push_back(v);
          for (int w : g.neighbors(v))
            if (member[w] == stamp) {
              member[w] = -stamp;
              st.push_back(w);
            }
        }
        subs.push_back(std::move(sub));
      }
      for (auto& sub : subs) work.push_back(std::move(sub));
    }
  }
  return tuple;
}

OrientedDag bfs_lightcone_orientation(const UndirectedGraph& g, int root) {
  auto tuple = lightcone_layers(g, root);
  std::vector<Arc> arcs;
  arcs.reserve(g.num_edges());
  for (auto [i, j] : g.edges()) {
    if (tuple[i] > tuple[j])
      arcs.push_back({i, j});
    else
      arcs.push_back({j, i});
  }
  std::vector<int> order(g.num_nodes());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tuple[a] > tuple[b]; });
  return OrientedDag(g, std::move(arcs), std::move(order));
}

namespace {

void check_bipolar_pre(const UndirectedGraph& g, int s, int t) {
  if (s < 0 || t < 0 || s >= g.num_nodes() || t >= g.num_nodes() || s == t)
    throw std::invalid_argument("bipolar orientation: invalid s/t");
  if (!g.has_edge(s, t)) throw std::invalid_argument("bipolar orientation: (s,t) must be an edge");
  if (g.num_nodes() != 2 && !is_biconnected(g))
    throw std::invalid_argument("bipolar orientation: graph is not biconnected");
}

OrientedDag from_numbering(const UndirectedGraph& g, const std::vector<int>& order) {
  std::vector<int> pos(g.num_nodes());
  for (int k = 0; k < g.num_nodes(); ++k) pos[order[k]] = k;
  std::vector<Arc> arcs;
  arcs.reserve(g.num_edges());
  for (auto [i, j] : g.edges()) arcs.push_back(pos[i] < pos[j] ? Arc{i, j} : Arc{j, i});
  return OrientedDag(g, std::move(arcs), order);
}

}  // namespace

OrientedDag bipolar_orientation_dfs(const UndirectedGraph& g, int s, int t) {
  check_bipolar_pre(g, s, t);
  const int n = g.num_nodes();
  std::vector<int> pre(n, -1), parent(n, -1), low(n, -1), preorder;
  preorder.reserve(n);
  // DFS from s whose first tree edge is (s,t).
  struct Frame {
    int v;
    std::size_t next;
  };
  pre[s] = 0;
  low[s] = s;
  preorder.push_back(s);
  pre[t] = 1;
  low[t] = t;
  parent[t] = s;
  preorder.push_back(t);
  std::vector<Frame> st{{s, 0}, {t, 0}};
  while (!st.empty()) {
    Frame& f = st.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      int w = nb[f.next++];
      if (pre[w] < 0) {
        pre[w] = static_cast<int>(preorder.size());
        preorder.push_back(w);
        parent[w] = f.v;
        low[w] = w;
        st.push_back({w, 0});
      } else if (w != parent[f.v] && pre[w] < pre[low[f.v]]) {
        low[f.v] = w;
      }
    } else {
      int v = f.v;
      st.pop_back();
      if (!st.empty()) {
        int p = st.back().v;
        if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
      }
    }
  }
  std::list<int> L{s, t};
  std::vector<std::list<int>::iterator> where(n);
  where[s] = L.begin();
  where[t] = std::next(L.begin());
  std::vector<int> sign(n, 0);
  sign[s] = -1;
  for (std::size_t k = 2; k < preorder.size(); ++k) {
    int v = preorder[k];
    int p = parent[v];
    if (sign[low[v]] == -1) {
      where[v] = L.insert(where[p], v);
      sign[p] = 1;
    } else {
      where[v] = L.insert(std::next(where[p]), v);
      sign[p] = -1;
    }
  }
  return from_numbering(g, std::vector<int>(L.begin(), L.end()));
}

OrientedDag bipolar_orientation_bfs(const UndirectedGraph& g, int s, int t) {
  check_bipolar_pre(g, s, t);
  // Open ear decomposition grown from the edge (s,t) with shortest ears found
  // by BFS; each ear's interior is inserted right after its earlier endpoint.
  const int n = g.num_nodes();
  std::vector<int> dist = bfs_distances(g, s);
  std::vector<char> in(n, 0);
  std::vector<int> order{s, t};
  in[s] = in[t] = 1;
  int included = 2;
  std::vector<int> prev(n, -1), mark(n, 0);
  int stamp = 0;
  while (included < n) {
    int u = -1;
    for (int v : order) {
      bool open = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](int w) { return !in[w]; });
      if (open && (u < 0 || dist[v] < dist[u] || (dist[v] == dist[u] && v < u))) u = v;
    }
    // Multi-source BFS from u's outside neighbors until an inside node != u is hit.
    ++stamp;
    std::queue<int> q;
    for (int w : g.neighbors(u))
      if (!in[w]) {
        mark[w] = stamp;
        prev[w] = u;
        q.push(w);
      }
    int last = -1, end = -1;
    while (!q.empty() && end < 0) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (in[y] && y != u) {
          last = x;
          end = y;
          break;
        }
        if (!in[y] && mark[y] != stamp) {
          mark[y] = stamp;
          prev[y] = x;
          q.push(y);
        }
      }
    }
    if (end < 0) throw std::logic_error("bipolar bfs: no ear found (graph not biconnected?)");
    std::vector<int> interior;
    for (int x = last; x != u; x = prev[x]) interior.push_back(x);
    std::reverse(interior.begin(), interior.end());  // u -> interior -> end
    auto pu = std::find(order.begin(), order.end(), u) - order.begin();
    auto pe = std::find(order.begin(), order.end(), end) - order.begin();
    int anchor = static_cast<int>(pu);
    if (pe < pu) {
      std::reverse(interior.begin(), interior.end());
      anchor = static_cast<int>(pe);
    }
    order.insert(order.begin() + anchor + 1, interior.begin(), interior.end());
    for (int x : interior) in[x] = 1;
    included += static_cast<int>(interior.size());
  }
  return from_numbering(g, order);
}

OrientedDag single_source_orientation(const UndirectedGraph& g, int root) {
  return bfs_lightcone_orientation(g, root).reversed();
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long d = std::gcd(num < 0 ? -num : num, den);
  if (d == 0) d = 1;
  return {num / d, den / d};
}

Rational averaged_heads_in_degree(const OrientedDag& dag) {
  if (dag.num_arcs() == 0) return {0, 1};
  long long sum = 0;
  for (const auto& a : dag.arcs()) sum += dag.in_degree(a.head) - 1;
  return make_rational(sum, dag.num_arcs());
}

std::pair<int, int> degree_pair(const OrientedDag& dag, int tail, int head) {
  if (!dag.has_arc(tail, head))
    throw std::invalid_argument("no arc " + std::to_string(tail) + " -> " + std::to_string(head));
  return {dag.out_degree(tail), dag.in_degree(head)};
}

int longest_path_length(const OrientedDag& dag) {
  std::vector<int> len(dag.num_nodes(), 0);
  int best = 0;
  for (int v : dag.topo_order())
    for (int w : dag.out_neighbors(v)) {
      len[w] = std::max(len[w], len[v] + 1);
      best = std::max(best, len[w]);
    }
  return best;
}

std::string write_orientation(const OrientedDag& dag) {
  std::ostringstream os;
  os << dag.num_nodes() << ' ' << dag.num_arcs() << '\n';
  for (const auto& a : dag.arcs()) os << a.tail << " -> " << a.head << '\n';
  os << "order:";
  for (int v : dag.topo_order()) os << ' ' << v;
  os << '\n';
  return os.str();
}

OrientedDag parse_orientation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  long long n = -1;
  std::vector<Arc> arcs;
  std::vector<int> order;
  bool have_order = false;
  int max_id = -1;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string a;
    if (!(ls >> a)) continue;
    if (a == "order:") {
      int v;
      while (ls >> v) order.push_back(v);
      if (!ls.eof()) throw ParseError(lineno, "malformed order line");
      have_order = true;
      continue;
    }
    std::string b, c;
    if (!(ls >> b)) throw ParseError(lineno, "malformed line");
    try {
      if (b == "->") {
        if (!(ls >> c)) throw ParseError(lineno, "missing head");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
        std::size_t p1 = 0, p2 = 0;
        int tail = std::stoi(a, &p1), head = std::stoi(c, &p2);
        if (p1 != a.size() || p2 != c.size() || tail < 0 || head < 0) throw ParseError(lineno, "bad node id");
        arcs.push_back({tail, head});
        max_id = std::max({max_id, tail, head});
      } else if (n < 0 && arcs.empty()) {
        n = std::stoll(a);
      } else {
        throw ParseError(lineno, "expected 'i -> j'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected integers");
    }
  }
  if (n < 0) n = max_id + 1;
  std::vector<Edge> edges;
  for (const auto& a : arcs) edges.push_back({a.tail, a.head});
  UndirectedGraph g(static_cast<int>(n), edges);
  // UndirectedGraph keeps insertion order, so arcs stay aligned with edges.
  return OrientedDag(g, arcs, have_order ? order : std::vector<int>{});
}

}  // namespace lcz
