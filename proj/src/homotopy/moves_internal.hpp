#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lamplighter/homotopy.hpp"

namespace lamplighter::detail {

PathSeq splice(const PathSeq& p, std::size_t i, std::size_t j, const PathSeq& replacement);

// Lazily computed balls of radius `scale` read off a distance matrix.
class BallCache {
 public:
  BallCache(const Graph& g, const DistanceMatrix& dm, int scale) : g_(g), dm_(dm), scale_(scale), balls_(dm.size()) {}
  const std::vector<Vertex>& ball(Vertex v);
  const Graph& graph() const { return g_; }
  const DistanceMatrix& metric() const { return dm_; }
  int scale() const { return scale_; }

 private:
  const Graph& g_;
  const DistanceMatrix& dm_;
  int scale_;
  std::vector<std::optional<std::vector<Vertex>>> balls_;
};

// Calls visit(i, j, xi) for every replacement of p[i..j] by a different walk xi
// with diam(p[i..j] + xi) <= scale and resulting length <= max_len.  Stops when
// visit returns false.
void for_each_move(BallCache& cache, const PathSeq& p, std::size_t max_len,
                   const std::function<bool(std::size_t, std::size_t, const PathSeq&)>& visit);

}  // namespace lamplighter::detail
