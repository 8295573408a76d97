#include "sic/enumerate.hpp"

#include "sic/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace sic {

namespace {

constexpr int kMaxCanonicalOrder = 11;  // n(n-1)/2 bits must fit in 64

// Color refinement: colors are ranks of (old color, sorted neighbor colors),
// so the final coloring is an isomorphism invariant.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      key[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      key[v].insert(key[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = key;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), key[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

// Bits of the row-major upper triangle, first bit most significant.
std::uint64_t code_for_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) code = (code << 1) | (g.adjacent(order[p], order[q]) ? 1u : 0u);
  }
  return code;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw CapacityError("canonical form is limited to 11 vertices");
  std::vector<int> color = refined_colors(g);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) ranges of equal color
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // odometer over the permutations of every cell
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, code_for_order(g, order));
      return;
    }
    auto [b, e] = cells[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      walk(c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  walk(0);
  return best;
}

Graph decode(int n, std::uint64_t code) {
  Graph g(n);
  int bits = n * (n - 1) / 2;
  int k = bits - 1;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q, --k) {
      if ((code >> k) & 1u) g.add_edge(p, q);
    }
  }
  return g;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  std::uint64_t code = canonical_code(g);
  int bits = n * (n - 1) / 2;
  std::string out(static_cast<std::size_t>(bits), '0');
  for (int k = 0; k < bits; ++k) {
    if ((code >> (bits - 1 - k)) & 1u) out[k] = '1';
  }
  return out;
}

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& visit) {
  if (n > kMaxGeneratedOrder) {
    throw CapacityError("nonisomorphic generation is limited to " + std::to_string(kMaxGeneratedOrder) +
                        " vertices; supply externally generated graph6 input for larger orders");
  }
  if (n < 0) throw ArgumentError("negative vertex count");
  // Every graph on k+1 vertices arises from one on k vertices plus a new vertex.
  std::set<std::uint64_t> level{0};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      Graph base = decode(k, code);
      for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
        Graph ext(k + 1);
        for (const Edge& e : base.edges()) ext.add_edge(e.u, e.v);
        for (int v = 0; v < k; ++v) {
          if (nb & (1u << v)) ext.add_edge(v, k);
        }
        next.insert(canonical_code(ext));
      }
    }
    level = std::move(next);
  }
  for (std::uint64_t code : level) visit(decode(n, code));
}

std::vector<Graph> generate_nonisomorphic(int n) {
  std::vector<Graph> out;
  for_each_nonisomorphic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace sic
