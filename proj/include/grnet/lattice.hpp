#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <vector>

#include "grnet/errors.hpp"

namespace grnet {

/// Lattice vertex, one coordinate per axis. Axes are numbered from 0.
using VertexIndex = std::vector<int>;

/// Box region given by per-axis maximal coordinates: extents (2,2,2) is the
/// vertex set {0,1,2}^3.
using Region = std::vector<int>;

inline VertexIndex shifted(VertexIndex v, int axis, int delta = 1) {
  v.at(axis) += delta;
  return v;
}

inline int coordinate_sum(const VertexIndex& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

inline std::vector<int> positive_axes(const VertexIndex& v) {
  std::vector<int> axes;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] > 0) axes.push_back(static_cast<int>(k));
  return axes;
}

inline bool in_region(const VertexIndex& v, const Region& extents) {
  if (v.size() != extents.size()) return false;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] < 0 || v[k] > extents[k]) return false;
  return true;
}

/// All box vertices in lexicographic order.
std::vector<VertexIndex> region_vertices(const Region& extents);

/// Box vertices ordered by coordinate sum, ties lexicographic. Filling in
/// this order guarantees every dependency of a propagation step is ready.
std::vector<VertexIndex> region_vertices_by_layer(const Region& extents);

struct EdgeKey {
  VertexIndex at;
  int axis = 0;
  auto operator<=>(const EdgeKey&) const = default;
};

struct PlaquetteKey {
  VertexIndex at;
  int i = 0;
  int j = 0;
  auto operator<=>(const PlaquetteKey&) const = default;
};

/// Value store keyed by vertex. std::map keeps iteration deterministic.
template <typename T>
class VertexField {
 public:
  bool has(const VertexIndex& v) const { return data_.count(v) > 0; }
  const T& at(const VertexIndex& v) const {
    auto it = data_.find(v);
    if (it == data_.end()) throw MissingValue("missing vertex value", v);
    return it->second;
  }
  void set(VertexIndex v, T value) { data_.insert_or_assign(std::move(v), std::move(value)); }
  const std::map<VertexIndex, T>& entries() const { return data_; }

 private:
  std::map<VertexIndex, T> data_;
};

/// Value store keyed by (vertex, axis). Also used for per-axis vertex
/// functions such as potentials, where `axis` names the family.
template <typename T>
class EdgeField {
 public:
  bool has(const VertexIndex& v, int axis) const {
    return data_.count(EdgeKey{v, axis}) > 0;
  }
  const T& at(const VertexIndex& v, int axis) const {
    auto it = data_.find(EdgeKey{v, axis});
    if (it == data_.end())
      throw MissingValue("missing edge value", v, {axis});
    return it->second;
  }
  void set(VertexIndex v, int axis, T value) {
    data_.insert_or_assign(EdgeKey{std::move(v), axis}, std::move(value));
  }
  const std::map<EdgeKey, T>& entries() const { return data_; }

 private:
  std::map<EdgeKey, T> data_;
};

/// Value store keyed by (vertex, ordered axis pair i != j).
template <typename T>
class PlaquetteField {
 public:
  bool has(const VertexIndex& v, int i, int j) const {
    return data_.count(PlaquetteKey{v, i, j}) > 0;
  }
  const T& at(const VertexIndex& v, int i, int j) const {
    auto it = data_.find(PlaquetteKey{v, i, j});
    if (it == data_.end())
      throw MissingValue("missing plaquette value", v, {i, j});
    return it->second;
  }
  void set(VertexIndex v, int i, int j, T value) {
    data_.insert_or_assign(PlaquetteKey{std::move(v), i, j}, std::move(value));
  }
  const std::map<PlaquetteKey, T>& entries() const { return data_; }

 private:
  std::map<PlaquetteKey, T> data_;
};

}  // namespace grnet
