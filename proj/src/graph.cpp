#include "crnx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace crnx {

namespace {

std::vector<std::vector<std::size_t>> successors(const ReactionGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.num_vertices);
  for (const GraphEdge& e : g.edges) adj[e.from].push_back(e.to);
  return adj;
}

Partition make_partition(std::vector<std::size_t> root_of, std::size_t n) {
  // Relabel components in order of their smallest vertex.
  Partition p;
  p.block_of.assign(n, 0);
  std::vector<std::size_t> label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = root_of[v];
    if (label[r] == n) {
      label[r] = p.blocks.size();
      p.blocks.emplace_back();
    }
    p.block_of[v] = label[r];
    p.blocks[label[r]].push_back(v);
  }
  return p;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ReactionGraph reaction_graph(const ReactionNetwork& net) {
  ReactionGraph g;
  g.num_vertices = net.num_complexes();
  for (const Reaction& r : net.reactions()) {
    g.edges.push_back(GraphEdge{r.source, r.target, r.index});
  }
  return g;
}

Partition linkage_classes(const ReactionGraph& g) {
  UnionFind uf(g.num_vertices);
  for (const GraphEdge& e : g.edges) uf.unite(e.from, e.to);
  std::vector<std::size_t> root(g.num_vertices);
  for (std::size_t v = 0; v < g.num_vertices; ++v) root[v] = uf.find(v);
  return make_partition(std::move(root), g.num_vertices);
}

Partition strong_linkage_classes(const ReactionGraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.num_vertices;
  const auto adj = successors(g);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    std::vector<Frame> call{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        std::size_t w = adj[f.v][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t smallest = v;
        std::vector<std::size_t> members;
        while (true) {
          std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
          smallest = std::min(smallest, w);
          if (w == v) break;
        }
        for (std::size_t w : members) comp[w] = smallest;
      }
    }
  }
  return make_partition(std::move(comp), n);
}

std::vector<ComplexSet> terminal_slcs(const ReactionGraph& g, const Partition& slcs) {
  std::vector<bool> has_exit(slcs.blocks.size(), false);
  for (const GraphEdge& e : g.edges) {
    if (slcs.block_of[e.from] != slcs.block_of[e.to]) has_exit[slcs.block_of[e.from]] = true;
  }
  std::vector<ComplexSet> out;
  for (std::size_t b = 0; b < slcs.blocks.size(); ++b) {
    if (!has_exit[b]) out.push_back(slcs.blocks[b]);
  }
  return out;
}

std::vector<ComplexSet> terminal_slcs(const ReactionGraph& g) {
  return terminal_slcs(g, strong_linkage_classes(g));
}

ComplexSet terminal_complexes(const ReactionGraph& g) {
  ComplexSet out;
  for (const ComplexSet& block : terminal_slcs(g)) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const ComplexSet& y, std::size_t v) {
  return std::binary_search(y.begin(), y.end(), v);
}

ComplexSet complement(const ComplexSet& y, std::size_t universe) {
  ComplexSet out;
  for (std::size_t v = 0; v < universe; ++v) {
    if (!contains(y, v)) out.push_back(v);
  }
  return out;
}

bool is_closed_set(const ReactionGraph& g, const ComplexSet& y) {
  for (const GraphEdge& e : g.edges) {
    if (contains(y, e.from) && !contains(y, e.to)) return false;
  }
  return true;
}

bool is_absorbing_set(const ReactionGraph& g, const ComplexSet& y) {
  for (std::size_t v : terminal_complexes(g)) {
    if (!contains(y, v)) return false;
  }
  return is_closed_set(g, y);
}

AbsorbingSets enumerate_absorbing_sets(const ReactionGraph& g, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("absorbing-set cap must be >= 1");
  // Closed supersets of the terminal set are unions of SLCs; grow them one
  // SLC at a time, adding only SLCs whose successors are already inside.
  const Partition slcs = strong_linkage_classes(g);
  const std::size_t nb = slcs.blocks.size();
  std::vector<std::set<std::size_t>> succ(nb);
  for (const GraphEdge& e : g.edges) {
    std::size_t a = slcs.block_of[e.from], b = slcs.block_of[e.to];
    if (a != b) succ[a].insert(b);
  }

  using Blocks = std::vector<bool>;
  auto members = [&](const Blocks& chosen) {
    ComplexSet out;
    for (std::size_t b = 0; b < nb; ++b)
      if (chosen[b]) out.insert(out.end(), slcs.blocks[b].begin(), slcs.blocks[b].end());
    std::sort(out.begin(), out.end());
    return out;
  };
  struct Entry {
    ComplexSet set;
    Blocks chosen;
    bool operator>(const Entry& o) const {
      if (set.size() != o.set.size()) return set.size() > o.set.size();
      return set > o.set;
    }
  };

  Blocks start(nb, false);
  for (std::size_t b = 0; b < nb; ++b) start[b] = succ[b].empty();

  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::set<Blocks> seen{start};
  queue.push(Entry{members(start), start});

  AbsorbingSets result;
  while (!queue.empty()) {
    if (result.sets.size() >= cap) {
      result.truncated = true;
      break;
    }
    Entry top = queue.top();
    queue.pop();
    for (std::size_t b = 0; b < nb; ++b) {
      if (top.chosen[b]) continue;
      bool ready = std::all_of(succ[b].begin(), succ[b].end(),
                               [&](std::size_t s) { return top.chosen[s]; });
      if (!ready) continue;
      Blocks next = top.chosen;
      next[b] = true;
      if (seen.insert(next).second) queue.push(Entry{members(next), next});
    }
    result.sets.push_back(std::move(top.set));
  }
  return result;
}

}  // namespace crnx
