#pragma once

#include "dplane/geometry.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace dplane {

struct Vertex {
  Point point;
  std::array<int, 2> lines;  // ascending line ids
};

/// A maximal piece of a line containing no vertex in its relative interior.
/// `tail`/`head` are vertex ids in the direction of Line::direction(); an
/// absent endpoint means the edge runs off to infinity on that side.
struct Edge {
  int line = -1;
  std::optional<int> tail;
  std::optional<int> head;
  int left = -1;   // chamber on the left of the direction
  int right = -1;  // chamber on the right

  bool bounded() const { return tail && head; }
};

struct Chamber {
  int id = -1;
  bool bounded = false;
  std::vector<int> sign_vector;  // per line, entries in {-1, +1}
  std::vector<int> vertices;     // ascending vertex ids
  std::vector<int> boundary;     // edge ids, counter-clockwise
  Point interior_point;

  std::size_t ngon() const { return vertices.size(); }
};

struct Disjoint {
  friend bool operator==(const Disjoint&, const Disjoint&) = default;
};
struct MeetAtPoint {
  int vertex;
  friend bool operator==(const MeetAtPoint&, const MeetAtPoint&) = default;
};
struct SharedEdge {
  int edge;
  friend bool operator==(const SharedEdge&, const SharedEdge&) = default;
};
using PairClass = std::variant<Disjoint, MeetAtPoint, SharedEdge>;

class NotNodal : public std::invalid_argument {
 public:
  NotNodal() : std::invalid_argument("not nodal") {}
};

/// Planar subdivision of a nodal arrangement. Bounded chambers carry ids
/// 0 .. bounded_count()-1; unbounded chambers follow. Vertex ids are ordered by
/// their (ascending) pair of line ids.
class ChamberComplex {
 public:
  static ChamberComplex build(const Arrangement& arr);

  const Arrangement& arrangement() const { return arr_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }
  const std::vector<int>& bounded_chamber_ids() const { return bounded_ids_; }
  std::size_t bounded_count() const { return bounded_ids_.size(); }

  const Chamber& chamber(int id) const { return chambers_.at(static_cast<std::size_t>(id)); }

  /// Throws std::out_of_range for unknown ids and std::invalid_argument for
  /// unbounded or equal chambers.
  PairClass classify_pair(int c1, int c2) const;

  /// n -> number of bounded n-gons.
  std::map<std::size_t, std::size_t> ngon_profile() const;

 private:
  Arrangement arr_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Chamber> chambers_;
  std::vector<int> bounded_ids_;
};

}  // namespace dplane
