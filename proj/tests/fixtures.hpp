#pragma once

#include <vector>

#include "barricade/graph.hpp"

namespace fixtures {

using barricade::Edge;
using barricade::Graph;

// Path a - b - c (ids 0, 1, 2) with unit edges both ways, barricades 1, 2, 1.
inline Graph p3() {
  const std::vector<Edge> edges{{0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}, {2, 1, 1.0}};
  return Graph(3, edges, std::vector<double>{1.0, 2.0, 1.0});
}

inline Graph isolated(std::size_t n, double b) { return Graph(n, std::vector<Edge>{}, b); }

}  // namespace fixtures
