#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tsemi/semigroup.hpp"
#include "tsemi/transform.hpp"

namespace tsemi {

enum class Direction { descending, ascending };

/// D-classes (= J-classes, finite case) of a semigroup together with the
/// induced strict partial order on classes and a canonical maximal-first
/// listing of the class indices.
///
/// Classes are the strongly connected components of the combined left/right
/// Cayley graph: u and v lie in one class iff each is reachable from the
/// other, i.e. iff they generate the same two-sided principal ideal.
struct DClassDecomposition {
  std::vector<std::vector<std::uint32_t>> classes;  // element indices
  std::vector<std::uint32_t> class_of;              // per element
  std::vector<std::size_t> class_rank;              // common rank per class
  // strict order pairs (a, b) with class a < class b, transitively closed
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_edges;
  // class indices, maximal classes first (ties: higher rank, then
  // lexicographically least member)
  std::vector<std::uint32_t> topological_listing;

  std::size_t class_count() const { return classes.size(); }

  bool less(std::uint32_t a, std::uint32_t b) const {  // a < b strictly
    return std::binary_search(order_edges.begin(), order_edges.end(),
                              std::make_pair(a, b));
  }
};

namespace detail {

// Iterative Tarjan SCC over the combined Cayley graph.  Successors of u are
// u*g and g*u for every generator g; both go weakly downward in the
// J-preorder.
inline std::vector<std::uint32_t> cayley_sccs(const SemigroupTable& table,
                                              std::size_t& count) {
  const std::size_t n = table.size();
  const std::size_t k = table.generators.size();
  constexpr std::uint32_t kUndef = 0xffffffffu;
  std::vector<std::uint32_t> idx(n, kUndef), low(n, 0), comp(n, kUndef);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;
  count = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  auto succ = [&](std::uint32_t v, std::size_t e) {
    return e < k ? table.right_edges[v][e] : table.left_edges[v][e - k];
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (idx[root] != kUndef) {
      continue;
    }
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e == 0) {
        idx[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (e < 2 * k) {
        const std::uint32_t w = succ(v, e);
        ++e;
        if (idx[w] == kUndef) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], idx[w]);
        }
      } else {
        if (low[v] == idx[v]) {
          while (true) {
            const std::uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = static_cast<std::uint32_t>(count);
            if (w == v) {
              break;
            }
          }
          ++count;
        }
        const std::uint32_t child = v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[child]);
        }
      }
    }
  }
  return comp;
}

}  // namespace detail

inline DClassDecomposition d_classes(const SemigroupTable& table) {
  DClassDecomposition out;
  std::size_t count = 0;
  out.class_of = detail::cayley_sccs(table, count);
  out.classes.assign(count, {});
  for (std::uint32_t e = 0; e < table.size(); ++e) {
    out.classes[out.class_of[e]].push_back(e);
  }
  out.class_rank.resize(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.class_rank[c] = rank(table.elements[out.classes[c][0]]);
  }

  // condensation reachability: reach[c] = set of classes weakly below c
  const std::size_t k = table.generators.size();
  std::vector<std::vector<bool>> reach(count,
                                       std::vector<bool>(count, false));
  std::vector<std::vector<std::uint32_t>> adj(count);
  for (std::uint32_t e = 0; e < table.size(); ++e) {
    const std::uint32_t c = out.class_of[e];
    for (std::size_t g = 0; g < k; ++g) {
      for (std::uint32_t v : {table.right_edges[e][g], table.left_edges[e][g]}) {
        if (out.class_of[v] != c) {
          adj[c].push_back(out.class_of[v]);
        }
      }
    }
  }
  // DFS from each class (class graph is small; quadratic is fine)
  for (std::uint32_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> todo{c};
    reach[c][c] = true;
    while (!todo.empty()) {
      const std::uint32_t u = todo.back();
      todo.pop_back();
      for (std::uint32_t v : adj[u]) {
        if (!reach[c][v]) {
          reach[c][v] = true;
          todo.push_back(v);
        }
      }
    }
  }
  for (std::uint32_t b = 0; b < count; ++b) {
    for (std::uint32_t a = 0; a < count; ++a) {
      if (a != b && reach[b][a]) {
        out.order_edges.emplace_back(a, b);  // a < b
      }
    }
  }
  std::sort(out.order_edges.begin(), out.order_edges.end());

  // maximal-first listing: a class is ready once all classes strictly above
  // it are emitted; ties resolved by (higher rank, lexicographically least
  // member)
  std::vector<std::uint32_t> above(count, 0);
  for (auto [a, b] : out.order_edges) {
    ++above[a];
  }
  std::vector<const Transformation*> least(count);
  for (std::uint32_t c = 0; c < count; ++c) {
    const Transformation* m = &table.elements[out.classes[c][0]];
    for (std::uint32_t e : out.classes[c]) {
      if (table.elements[e] < *m) {
        m = &table.elements[e];
      }
    }
    least[c] = m;
  }
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<bool> emitted(count, false);
  for (std::size_t step = 0; step < count; ++step) {
    std::uint32_t best = kNone;
    for (std::uint32_t c = 0; c < count; ++c) {
      if (emitted[c] || above[c] != 0) {
        continue;
      }
      if (best == kNone || out.class_rank[c] > out.class_rank[best] ||
          (out.class_rank[c] == out.class_rank[best] &&
           *least[c] < *least[best])) {
        best = c;
      }
    }
    emitted[best] = true;
    out.topological_listing.push_back(best);
    // retire the edges out of best
    for (std::uint32_t a = 0; a < count; ++a) {
      if (a != best && reach[best][a]) {
        --above[a];
      }
    }
  }
  return out;
}

/// Elements listed class by class.  Descending puts maximal J-classes
/// first (if class(s) < class(t) then t appears before s); ascending is the
/// same listing with the class blocks reversed.  Within a class, elements
/// appear in lexicographic transformation order.
inline std::vector<Transformation> ordered_elements(
    const SemigroupTable& table, const DClassDecomposition& decomposition,
    Direction direction = Direction::descending) {
  std::vector<std::uint32_t> order = decomposition.topological_listing;
  if (direction == Direction::ascending) {
    std::reverse(order.begin(), order.end());
  }
  std::vector<Transformation> out;
  out.reserve(table.size());
  for (std::uint32_t c : order) {
    std::vector<Transformation> block;
    block.reserve(decomposition.classes[c].size());
    for (std::uint32_t e : decomposition.classes[c]) {
      block.push_back(table.elements[e]);
    }
    std::sort(block.begin(), block.end());
    for (auto& t : block) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace tsemi
