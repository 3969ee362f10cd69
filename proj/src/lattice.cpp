#include "grnet/lattice.hpp"

#include <algorithm>

namespace grnet {

std::vector<VertexIndex> region_vertices(const Region& extents) {
  std::vector<VertexIndex> out;
  VertexIndex v(extents.size(), 0);
  for (;;) {
    out.push_back(v);
    // Odometer increment with the last axis fastest gives lex order.
    int k = static_cast<int>(extents.size()) - 1;
    while (k >= 0) {
      if (v[k] < extents[k]) {
        ++v[k];
        break;
      }
      v[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<VertexIndex> region_vertices_by_layer(const Region& extents) {
  std::vector<VertexIndex> out = region_vertices(extents);
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexIndex& a, const VertexIndex& b) {
                     return coordinate_sum(a) < coordinate_sum(b);
                   });
  return out;
}

}  // namespace grnet
