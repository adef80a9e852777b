#pragma once

#include <cstdint>
#include <functional>

#include "ghom/graph.hpp"

namespace ghom {

inline constexpr std::size_t kMaxEnumeratedVertices = 6;

/// All labelled graphs on exactly `n` vertices (named "0".."n-1"), optionally
/// with every loop pattern. Graph k is decoded from the bits of k: first the
/// pairs i<j in lexicographic order, then the loops 0..n-1. Random access by
/// index lets callers split the family across threads.
class GraphFamily {
 public:
  GraphFamily(std::size_t n, bool with_loops);

  std::size_t vertices() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << bits_; }
  Graph at(std::uint64_t k) const;

 private:
  std::size_t n_;
  bool loops_;
  unsigned bits_;
};

/// Visits every labelled graph on 1..max_vertices vertices in family order.
/// max_vertices above kMaxEnumeratedVertices throws TooLarge.
void enumerate_graphs(std::size_t max_vertices, bool with_loops,
                      const std::function<void(const Graph&)>& visit);

std::vector<Graph> all_graphs(std::size_t max_vertices, bool with_loops);

}  // namespace ghom
