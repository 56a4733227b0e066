#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace malcev::detail {

inline constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;

struct SccResult {
  // component[v] for visited v, kUnvisited otherwise. Components are numbered
  // in the order Tarjan completes them, so every edge goes from a component
  // to one with a smaller or equal number.
  std::vector<std::uint32_t> component;
  std::size_t count = 0;
  // True when the component contains a cycle (two or more nodes, or a
  // self-loop).
  std::vector<bool> cyclic;
};

// Iterative Tarjan over the nodes reachable from starts. Graph must provide
// std::size_t degree(std::uint32_t) and std::uint32_t successor(std::uint32_t,
// std::size_t); a successor equal to kUnvisited is skipped.
template <typename Graph, typename Starts>
SccResult tarjan(Graph const& g, std::size_t num_nodes, Starts const& starts) {
  SccResult res;
  res.component.assign(num_nodes, kUnvisited);
  std::vector<std::uint32_t> index(num_nodes, kUnvisited);
  std::vector<std::uint32_t> low(num_nodes, 0);
  std::vector<char> on_stack(num_nodes, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0;

  for (std::uint32_t root : starts) {
    if (index[root] != kUnvisited) {
      continue;
    }
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, k] = call.back();
      std::size_t deg = g.degree(v);
      if (k < deg) {
        std::uint32_t w = g.successor(v, k);
        ++k;
        if (w == kUnvisited) {
          continue;
        }
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          if (index[w] < low[v]) {
            low[v] = index[w];
          }
        }
        continue;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        if (low[done] < low[parent]) {
          low[parent] = low[done];
        }
      }
      if (low[done] == index[done]) {
        std::uint32_t c = static_cast<std::uint32_t>(res.count++);
        std::size_t size = 0;
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          res.component[w] = c;
          ++size;
          if (w == done) {
            break;
          }
        }
        bool cyc = size > 1;
        if (!cyc) {
          std::size_t d = g.degree(done);
          for (std::size_t j = 0; j < d && !cyc; ++j) {
            cyc = g.successor(done, j) == done;
          }
        }
        res.cyclic.push_back(cyc);
      }
    }
  }
  return res;
}

}  // namespace malcev::detail
