// graph6 codec (McKay's ASCII format): size header, then the upper triangle
// in column-major order packed big-endian into 6-bit printable chunks.
#pragma once

#include <stdexcept>
#include <string>

#include "turan/graph.hpp"

namespace turan {

struct Graph6Error : std::runtime_error {
  std::size_t byte_offset;
  Graph6Error(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"),
        byte_offset(off) {}
};

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace turan
