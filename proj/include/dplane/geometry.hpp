#pragma once

#include "dplane/numeric.hpp"

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dplane {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

// Lexicographic (x, then y). Used for deterministic ordering only.
bool lex_less(const Point& a, const Point& b);

/// The affine line a*x + b*y + c = 0, stored with the first nonzero of (a, b)
/// scaled to 1 so that two lines with the same locus compare equal.
class Line {
 public:
  Line(Rational a, Rational b, Rational c, int id = 0);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  int id() const { return id_; }
  void set_id(int id) { id_ = id; }

  Rational evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  // Direction vector (b, -a); parameters t = direction . P increase along it.
  Point direction() const { return {b_, -a_}; }
  Point some_point() const;

  bool same_locus(const Line& other) const {
    return a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
  }
  bool parallel_to(const Line& other) const {
    return a_ * other.b_ - other.a_ * b_ == 0;
  }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Rational a_, b_, c_;
  int id_;
};

class DegeneratePair : public std::invalid_argument {
 public:
  DegeneratePair() : std::invalid_argument("degenerate pair") {}
};

/// Unique crossing point, or nullopt for parallel lines. Throws DegeneratePair
/// when both lines have the same locus.
std::optional<Point> intersect(const Line& l1, const Line& l2);

/// Sign of a*x + b*y + c at p.
int side(const Line& l, const Point& p);

/// Ordered list of lines; ids are the positions in the list.
class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Line> lines);

  std::size_t size() const { return lines_.size(); }
  const Line& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<Line>& lines() const { return lines_; }
  void add(Line l);

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::vector<Line> lines_;
};

struct ValidationReport {
  std::size_t lines = 0;
  bool nodal = true;  // no duplicates and no three lines through one point
  int parallel_pairs = 0;
  std::size_t largest_parallel_class = 0;
  bool parallel_condition = true;  // every parallel class has at most two lines
  std::vector<std::pair<int, int>> duplicates;
  std::vector<std::array<int, 3>> concurrent_triples;

  bool lattice_ready() const { return nodal && parallel_condition && lines >= 3; }
};

ValidationReport validate(const Arrangement& arr);

}  // namespace dplane
