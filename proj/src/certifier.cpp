#include "sic/certifier.hpp"

#include "sic/builtin_graphs.hpp"
#include "sic/errors.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace sic {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::string label(int v) { return std::to_string(v + 1); }

}  // namespace

CertState::CertState(const Graph& g) : n_(g.order()) {
  if (n_ > 64) throw CapacityError("certifier supports at most 64 vertices, got " + std::to_string(n_));
  adj_.assign(n_, 0);
  class_.assign(n_, 0);
  for (int v = 0; v < n_; ++v) {
    adj_[v] = g.neighbor_mask(v);
    class_[v] = bit(v);
    alive_ |= bit(v);
  }
}

std::size_t CertState::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v)
    if (alive(v)) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void CertState::add_edge(int u, int v) {
  if (u == v) {
    loop_ = true;
    return;
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void CertState::merge(int u, int v) {
  if (u == v) return;
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) loop_ = true;
  Mask nv = adj_[v] & ~bit(u);
  for (Mask m = nv; m; m &= m - 1) {
    int w = std::countr_zero(m);
    adj_[w] &= ~bit(v);
    adj_[w] |= bit(u);
  }
  adj_[u] = (adj_[u] | nv) & ~bit(v);
  adj_[v] = 0;
  class_[u] |= class_[v];
  class_[v] = 0;
  alive_ &= ~bit(v);
}

std::vector<std::array<int, 4>> CertState::four_cliques() const {
  std::vector<std::array<int, 4>> out;
  for (Mask ma = alive_; ma; ma &= ma - 1) {
    int a = std::countr_zero(ma);
    Mask ca = adj_[a] & alive_ & ~((bit(a) << 1) - 1);
    for (Mask mb = ca; mb; mb &= mb - 1) {
      int b = std::countr_zero(mb);
      Mask cb = ca & adj_[b] & ~((bit(b) << 1) - 1);
      for (Mask mc = cb; mc; mc &= mc - 1) {
        int c = std::countr_zero(mc);
        Mask cc = cb & adj_[c] & ~((bit(c) << 1) - 1);
        for (Mask md = cc; md; md &= md - 1) out.push_back({a, b, c, std::countr_zero(md)});
      }
    }
  }
  return out;
}

bool CertState::contradictory() const { return !contradiction().empty(); }

std::string CertState::contradiction() const {
  if (loop_) return "self-loop";
  for (const auto& k : four_cliques()) {
    Mask common = alive_ & adj_[k[0]] & adj_[k[1]] & adj_[k[2]] & adj_[k[3]];
    if (common) {
      std::array<int, 5> c{k[0], k[1], k[2], k[3], std::countr_zero(common)};
      std::sort(c.begin(), c.end());
      std::string s = "clique of size 5:";
      for (int v : c) s += " " + label(v);
      return s;
    }
  }
  return {};
}

std::string CertState::key() const {
  std::string k(sizeof(Mask) * (1 + n_), '\0');
  auto put = [&](std::size_t slot, Mask m) {
    for (std::size_t i = 0; i < sizeof(Mask); ++i) k[slot * sizeof(Mask) + i] = static_cast<char>(m >> (8 * i));
  };
  put(0, alive_);
  for (int v = 0; v < n_; ++v) put(1 + v, adj_[v]);
  return k;
}

std::string RuleStep::describe() const {
  std::ostringstream os;
  if (rule == 0) {
    os << "initial merge of " << label(x) << " and " << label(y);
    return os.str();
  }
  os << "rule " << rule << " on {" << label(clique[0]) << "," << label(clique[1]) << "," << label(clique[2]) << ","
     << label(clique[3]) << "}: ";
  if (rule == 2)
    os << "merge " << label(x) << " and " << label(y);
  else
    os << "add (" << label(x) << "," << label(y) << ")";
  return os.str();
}

namespace {

Mask clique_mask(const std::array<int, 4>& k) { return bit(k[0]) | bit(k[1]) | bit(k[2]) | bit(k[3]); }

bool fire_rule2(CertState& s, std::vector<RuleStep>& steps) {
  for (const auto& k : s.four_cliques()) {
    Mask km = clique_mask(k);
    for (Mask mx = s.alive_mask() & ~km; mx; mx &= mx - 1) {
      int x = std::countr_zero(mx);
      Mask nk = s.neighbors(x) & km;
      if (std::popcount(nk) != 3) continue;
      int d = std::countr_zero(km & ~nk);
      steps.push_back({2, x, d, k});
      s.merge(x, d);
      return true;
    }
  }
  return false;
}

bool fire_rule1(CertState& s, std::vector<RuleStep>& steps) {
  bool fired = false;
  for (const auto& k : s.four_cliques()) {
    Mask km = clique_mask(k);
    Mask outside = s.alive_mask() & ~km;
    for (Mask mx = outside; mx; mx &= mx - 1) {
      int x = std::countr_zero(mx);
      Mask nx = s.neighbors(x) & km;
      if (std::popcount(nx) < 2) continue;
      for (Mask my = outside & ~((bit(x) << 1) - 1); my; my &= my - 1) {
        int y = std::countr_zero(my);
        if (s.adjacent(x, y)) continue;
        Mask ny = s.neighbors(y) & km;
        if (std::popcount(ny) < 2 || (nx | ny) != km) continue;
        // need a 2-subset of nx whose complement in the clique lies in ny
        bool ok = false;
        for (int i = 0; i < 4 && !ok; ++i)
          for (int j = i + 1; j < 4 && !ok; ++j) {
            Mask pair = bit(k[i]) | bit(k[j]);
            ok = (pair & ~nx) == 0 && ((km & ~pair) & ~ny) == 0;
          }
        if (!ok) continue;
        steps.push_back({1, x, y, k});
        s.add_edge(x, y);
        fired = true;
      }
    }
  }
  return fired;
}

struct Rule3 {
  int x, y, c;
  std::array<int, 4> clique;
};

std::optional<Rule3> first_rule3(const CertState& s) {
  auto cliques = s.four_cliques();
  Mask alive = s.alive_mask();
  for (Mask mx = alive; mx; mx &= mx - 1) {
    int x = std::countr_zero(mx);
    for (Mask my = alive & s.neighbors(x); my; my &= my - 1) {
      int y = std::countr_zero(my);
      for (const auto& k : cliques) {
        Mask km = clique_mask(k);
        if ((km & (bit(x) | bit(y))) != 0) continue;
        Mask nx = s.neighbors(x) & km;
        if (std::popcount(nx) != 2) continue;
        Mask rest = km & ~nx;
        int c1 = std::countr_zero(rest);
        int c2 = std::countr_zero(rest & (rest - 1));
        for (auto [c, d] : {std::pair{c1, c2}, std::pair{c2, c1}}) {
          if (s.adjacent(y, d) && !s.adjacent(y, c)) return Rule3{x, y, c, k};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<RuleStep> apply_rules_to_fixpoint(CertState& s) {
  std::vector<RuleStep> steps;
  while (!s.contradictory()) {
    if (fire_rule2(s, steps)) continue;
    if (!fire_rule1(s, steps)) break;
  }
  return steps;
}

std::vector<CertState> successors(const CertState& s) {
  if (s.contradictory()) return {};
  CertState next = s;
  if (!apply_rules_to_fixpoint(next).empty()) return {next};
  auto r = first_rule3(s);
  if (!r) return {};
  CertState a = s, b = s;
  a.add_edge(r->y, r->c);
  b.add_edge(r->x, r->c);
  return {a, b};
}

namespace {

struct CapHit {};

struct Search {
  const CertifierConfig& cfg;
  CertVerdict& out;
  std::unordered_set<std::string> refuted;
  std::vector<RuleStep> trace;

  void leaf(const std::string& why) {
    ++out.leaves;
    if (cfg.record_traces) out.traces.push_back({trace, why});
    if (out.leaves > cfg.max_leaves) throw CapHit{};
  }

  bool explore(CertState s) {
    std::size_t mark = trace.size();
    auto steps = apply_rules_to_fixpoint(s);
    out.steps += static_cast<long>(steps.size());
    if (out.steps > cfg.max_steps) throw CapHit{};
    trace.insert(trace.end(), steps.begin(), steps.end());
    bool result = true;
    if (auto why = s.contradiction(); !why.empty()) {
      leaf(why);
    } else if (refuted.contains(s.key())) {
      ++out.memo_hits;
      leaf("previously refuted state");
    } else if (auto r = first_rule3(s)) {
      ++out.branchings;
      for (int side = 0; side < 2 && result; ++side) {
        CertState next = s;
        int u = side == 0 ? r->y : r->x;
        next.add_edge(u, r->c);
        trace.push_back({3, u, r->c, r->clique});
        result = explore(std::move(next));
        trace.pop_back();
      }
      if (result) refuted.insert(s.key());
    } else {
      ++out.leaves;
      out.diagnostic = "fixpoint without contradiction (" + std::to_string(std::popcount(s.alive_mask())) +
                       " vertices, " + std::to_string(s.edge_count()) + " edges)";
      result = false;
    }
    trace.resize(mark);
    return result;
  }
};

}  // namespace

CertVerdict certify_no_rank1_4d(const Graph& g, const std::vector<std::pair<int, int>>& merges,
                                const CertifierConfig& cfg) {
  CertState s(g);
  CertVerdict out;
  Search search{cfg, out, {}, {}};
  for (auto [a, b] : merges) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b)
      throw ArgumentError("invalid merge pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    int ra = a, rb = b;
    // follow earlier merges to the surviving representative
    for (int v = 0; v < g.order(); ++v) {
      if (s.merge_class(v) & bit(a)) ra = v;
      if (s.merge_class(v) & bit(b)) rb = v;
    }
    search.trace.push_back({0, ra, rb, {}});
    s.merge(ra, rb);
  }
  try {
    out.certified = search.explore(std::move(s));
    if (out.certified) out.diagnostic = "every branch reached a contradiction";
  } catch (const CapHit&) {
    out.certified = false;
    out.diagnostic = "search cap reached after " + std::to_string(out.leaves) + " leaves and " +
                     std::to_string(out.steps) + " rule steps";
  }
  return out;
}

const std::vector<std::pair<int, int>>& gtoh_case2_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{5, 21}, {4, 24}, {14, 23}, {3, 10}, {3, 22}, {4, 22}};
  return pairs;
}

std::vector<Case2Entry> gtoh_case2_report(const CertifierConfig& cfg) {
  std::vector<Case2Entry> out;
  for (auto p : gtoh_case2_pairs())
    out.push_back({p, certify_no_rank1_4d(g_toh(), {{p.first - 1, p.second - 1}}, cfg)});
  return out;
}

}  // namespace sic
