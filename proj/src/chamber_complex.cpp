#include "dplane/chamber_complex.hpp"

#include <algorithm>
#include <numeric>

namespace dplane {

namespace {

Point scaled(const Point& u, int s) {
  if (s > 0) return u;
  return {-u.x, -u.y};
}

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

int half_plane(const Point& u) { return (u.y > 0 || (u.y == 0 && u.x > 0)) ? 0 : 1; }

// Strict counter-clockwise order of direction vectors starting at angle 0.
bool angle_less(const Point& u, const Point& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

bool same_direction(const Point& u, const Point& v) {
  return half_plane(u) == half_plane(v) && cross(u, v) == 0;
}

constexpr int kNone = -1;

struct HalfEdge {
  int line = kNone;
  int sense = 1;  // +1 along Line::direction()
  int edge = kNone;
  int origin_vertex = kNone, dest_vertex = kNone;
  int origin_end = kNone, dest_end = kNone;  // ends at infinity
  int twin = kNone;
  int next = kNone;
  int face = kNone;

  bool touches_infinity() const { return origin_end != kNone || dest_end != kNone; }
};

}  // namespace

ChamberComplex ChamberComplex::build(const Arrangement& arr) {
  if (arr.size() < 2) throw std::invalid_argument("an arrangement needs at least two lines");
  if (!validate(arr).nodal) throw NotNodal();

  ChamberComplex cc;
  cc.arr_ = arr;
  const auto& lines = arr.lines();
  const int n_lines = static_cast<int>(lines.size());

  for (int i = 0; i < n_lines; ++i)
    for (int j = i + 1; j < n_lines; ++j)
      if (auto p = intersect(lines[i], lines[j])) cc.vertices_.push_back({*p, {i, j}});

  // Vertices on each line, sorted along the line direction.
  std::vector<std::vector<int>> on_line(lines.size());
  for (std::size_t v = 0; v < cc.vertices_.size(); ++v)
    for (int l : cc.vertices_[v].lines) on_line[l].push_back(static_cast<int>(v));
  for (int i = 0; i < n_lines; ++i) {
    const Point d = lines[i].direction();
    auto param = [&](int v) {
      const Point& p = cc.vertices_[v].point;
      return d.x * p.x + d.y * p.y;
    };
    std::sort(on_line[i].begin(), on_line[i].end(),
              [&](int u, int v) { return param(u) < param(v); });
  }

  // Edges and half-edges. End 2i lies at infinity in direction +d_i, end
  // 2i+1 in direction -d_i.
  std::vector<HalfEdge> he;
  std::vector<int> into_end(2 * lines.size(), kNone), out_of_end(2 * lines.size(), kNone);
  std::vector<std::vector<int>> out_of_vertex(cc.vertices_.size());

  auto add_edge = [&](int line, std::optional<int> tail, std::optional<int> head) {
    const int e = static_cast<int>(cc.edges_.size());
    cc.edges_.push_back({line, tail, head, kNone, kNone});
    HalfEdge fwd, bwd;
    fwd.line = bwd.line = line;
    fwd.edge = bwd.edge = e;
    fwd.sense = 1;
    bwd.sense = -1;
    if (tail) {
      fwd.origin_vertex = bwd.dest_vertex = *tail;
    } else {
      fwd.origin_end = bwd.dest_end = 2 * line + 1;
    }
    if (head) {
      fwd.dest_vertex = bwd.origin_vertex = *head;
    } else {
      fwd.dest_end = bwd.origin_end = 2 * line;
    }
    const int f = static_cast<int>(he.size());
    fwd.twin = f + 1;
    bwd.twin = f;
    he.push_back(fwd);
    he.push_back(bwd);
    for (int h : {f, f + 1}) {
      if (he[h].origin_vertex != kNone) out_of_vertex[he[h].origin_vertex].push_back(h);
      if (he[h].origin_end != kNone) out_of_end[he[h].origin_end] = h;
      if (he[h].dest_end != kNone) into_end[he[h].dest_end] = h;
    }
  };

  for (int i = 0; i < n_lines; ++i) {
    const auto& vs = on_line[i];
    if (vs.empty()) {
      add_edge(i, std::nullopt, std::nullopt);
      continue;
    }
    add_edge(i, std::nullopt, vs.front());
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) add_edge(i, vs[k], vs[k + 1]);
    add_edge(i, vs.back(), std::nullopt);
  }

  auto he_direction = [&](const HalfEdge& h) { return scaled(lines[h.line].direction(), h.sense); };

  // Counter-clockwise order of outgoing half-edges around each vertex.
  std::vector<int> pos_at_vertex(he.size(), kNone);
  for (auto& out : out_of_vertex) {
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      return angle_less(he_direction(he[a]), he_direction(he[b]));
    });
    for (std::size_t k = 0; k < out.size(); ++k) pos_at_vertex[out[k]] = static_cast<int>(k);
  }

  // Counter-clockwise order of the ends on the circle at infinity; parallel
  // ends are ordered by their offset along the left normal.
  std::vector<int> ends(2 * lines.size());
  std::iota(ends.begin(), ends.end(), 0);
  auto end_direction = [&](int e) { return scaled(lines[e / 2].direction(), e % 2 == 0 ? 1 : -1); };
  auto end_offset = [&](int e) {
    const Point u = end_direction(e);
    const Point p = lines[e / 2].some_point();
    return -u.y * p.x + u.x * p.y;
  };
  std::sort(ends.begin(), ends.end(), [&](int a, int b) {
    const Point ua = end_direction(a), ub = end_direction(b);
    if (!same_direction(ua, ub)) return angle_less(ua, ub);
    return end_offset(a) < end_offset(b);
  });
  std::vector<int> end_pos(ends.size());
  for (std::size_t k = 0; k < ends.size(); ++k) end_pos[ends[k]] = static_cast<int>(k);

  // Faces lie on the left of their half-edges.
  for (auto& h : he) {
    if (h.dest_end != kNone) {
      const int k = (end_pos[h.dest_end] + 1) % static_cast<int>(ends.size());
      h.next = out_of_end[ends[k]];
    } else {
      const auto& out = out_of_vertex[h.dest_vertex];
      const int deg = static_cast<int>(out.size());
      h.next = out[(pos_at_vertex[h.twin] + deg - 1) % deg];
    }
  }

  // Trace face cycles.
  std::vector<std::vector<int>> cycles;
  for (std::size_t start = 0; start < he.size(); ++start) {
    if (he[start].face != kNone) continue;
    std::vector<int> cycle;
    int h = static_cast<int>(start);
    const int face = static_cast<int>(cycles.size());
    while (he[h].face == kNone) {
      he[h].face = face;
      cycle.push_back(h);
      h = he[h].next;
    }
    if (h != static_cast<int>(start)) throw std::logic_error("face traversal is not a permutation");
    cycles.push_back(std::move(cycle));
  }
  if (cycles.size() != 1 + lines.size() + cc.vertices_.size())
    throw std::logic_error("face count violates the Euler relation");

  // Bounded faces first, keeping discovery order within each group.
  std::vector<int> face_to_chamber(cycles.size());
  std::vector<int> order;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    bool bounded = std::none_of(cycles[f].begin(), cycles[f].end(),
                                [&](int h) { return he[h].touches_infinity(); });
    if (bounded) order.push_back(static_cast<int>(f));
  }
  const std::size_t n_bounded = order.size();
  for (std::size_t f = 0; f < cycles.size(); ++f)
    if (std::find(order.begin(), order.begin() + n_bounded, int(f)) == order.begin() + n_bounded)
      order.push_back(static_cast<int>(f));
  for (std::size_t id = 0; id < order.size(); ++id) face_to_chamber[order[id]] = static_cast<int>(id);

  for (const auto& h : he) {
    Edge& e = cc.edges_[h.edge];
    (h.sense > 0 ? e.left : e.right) = face_to_chamber[h.face];
  }

  for (std::size_t id = 0; id < order.size(); ++id) {
    const auto& cycle = cycles[order[id]];
    Chamber ch;
    ch.id = static_cast<int>(id);
    ch.bounded = id < n_bounded;
    for (int h : cycle) {
      ch.boundary.push_back(he[h].edge);
      if (he[h].dest_vertex != kNone) ch.vertices.push_back(he[h].dest_vertex);
    }
    std::sort(ch.vertices.begin(), ch.vertices.end());

    if (ch.bounded) {
      // Centroid of the vertex polygon; interior by convexity.
      Rational sx = 0, sy = 0;
      for (int v : ch.vertices) {
        sx += cc.vertices_[v].point.x;
        sy += cc.vertices_[v].point.y;
      }
      const Rational k(static_cast<long long>(ch.vertices.size()));
      ch.interior_point = {sx / k, sy / k};
    } else {
      // Step off the relative interior of a boundary half-edge towards its
      // left, stopping halfway to the nearest other line.
      const HalfEdge& h = he[cycle.front()];
      const Point s = he_direction(h);
      Point q;
      if (h.origin_vertex != kNone && h.dest_vertex != kNone) {
        const Point& a = cc.vertices_[h.origin_vertex].point;
        const Point& b = cc.vertices_[h.dest_vertex].point;
        q = {(a.x + b.x) / 2, (a.y + b.y) / 2};
      } else if (h.origin_vertex != kNone) {
        const Point& a = cc.vertices_[h.origin_vertex].point;
        q = {a.x + s.x, a.y + s.y};
      } else if (h.dest_vertex != kNone) {
        const Point& b = cc.vertices_[h.dest_vertex].point;
        q = {b.x - s.x, b.y - s.y};
      } else {
        q = lines[h.line].some_point();
      }
      const Point w{-s.y, s.x};
      std::optional<Rational> nearest;
      for (int j = 0; j < n_lines; ++j) {
        if (j == h.line) continue;
        Rational rate = lines[j].a() * w.x + lines[j].b() * w.y;
        if (rate == 0) continue;
        Rational t = -lines[j].evaluate(q) / rate;
        if (t > 0 && (!nearest || t < *nearest)) nearest = t;
      }
      const Rational step = nearest ? *nearest / 2 : Rational(1);
      ch.interior_point = {q.x + step * w.x, q.y + step * w.y};
    }

    ch.sign_vector.reserve(lines.size());
    for (const Line& l : lines) {
      int s = side(l, ch.interior_point);
      if (s == 0) throw std::logic_error("chamber interior point lies on a line");
      ch.sign_vector.push_back(s);
    }
    if (ch.bounded) cc.bounded_ids_.push_back(ch.id);
    cc.chambers_.push_back(std::move(ch));
  }
  return cc;
}

PairClass ChamberComplex::classify_pair(int c1, int c2) const {
  const Chamber& a = chamber(c1);
  const Chamber& b = chamber(c2);
  if (!a.bounded || !b.bounded) throw std::invalid_argument("pair classification needs bounded chambers");
  if (c1 == c2) throw std::invalid_argument("pair classification needs distinct chambers");

  std::vector<int> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(common));
  std::optional<int> shared_edge;
  for (int e : a.boundary) {
    const Edge& edge = edges_[e];
    if ((edge.left == c1 && edge.right == c2) || (edge.left == c2 && edge.right == c1)) {
      shared_edge = e;
      break;
    }
  }

  if (common.size() == 2 && shared_edge) return SharedEdge{*shared_edge};
  if (common.size() == 1 && !shared_edge) return MeetAtPoint{common.front()};
  if (common.empty() && !shared_edge) return Disjoint{};
  throw std::logic_error("inconsistent chamber incidence");
}

std::map<std::size_t, std::size_t> ChamberComplex::ngon_profile() const {
  std::map<std::size_t, std::size_t> profile;
  for (int id : bounded_ids_) ++profile[chamber(id).ngon()];
  return profile;
}

}  // namespace dplane
