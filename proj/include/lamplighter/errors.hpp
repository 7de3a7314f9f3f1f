#pragma once

#include <stdexcept>
#include <string>

namespace lamplighter {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex id or label not present in the graph.
struct unknown_vertex : error {
  using error::error;
};

// A configured size or search budget would be exceeded.
struct cap_exceeded : error {
  using error::error;
};

// The answer could be changed by what lies beyond the materialized window.
struct window_error : error {
  using error::error;
};

struct disconnected_error : error {
  using error::error;
};

// Input violates a documented precondition.
struct invalid_argument : error {
  using error::error;
};

}  // namespace lamplighter
