#include "dplane/geometry.hpp"

#include <map>

namespace dplane {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Line::Line(Rational a, Rational b, Rational c, int id)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), id_(id) {
  if (a_ == 0 && b_ == 0) throw std::invalid_argument("line with a = b = 0");
  Rational lead = a_ != 0 ? a_ : b_;
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

Point Line::some_point() const {
  if (b_ != 0) return {Rational(0), -c_ / b_};
  return {-c_ / a_, Rational(0)};
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  if (l1.same_locus(l2)) throw DegeneratePair();
  Rational det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return std::nullopt;
  // Cramer's rule on a1 x + b1 y = -c1, a2 x + b2 y = -c2.
  Rational x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  Rational y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return Point{std::move(x), std::move(y)};
}

int side(const Line& l, const Point& p) { return l.evaluate(p).sign(); }

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) lines_[i].set_id(static_cast<int>(i));
}

void Arrangement::add(Line l) {
  l.set_id(static_cast<int>(lines_.size()));
  lines_.push_back(std::move(l));
}

namespace {

// Determinant of the 3x3 coefficient matrix; zero iff the three lines pass
// through one projective point (an affine triple point, or all parallel).
Rational det3(const Line& l, const Line& m, const Line& n) {
  return l.a() * (m.b() * n.c() - n.b() * m.c()) - l.b() * (m.a() * n.c() - n.a() * m.c()) +
         l.c() * (m.a() * n.b() - n.a() * m.b());
}

}  // namespace

ValidationReport validate(const Arrangement& arr) {
  ValidationReport rep;
  const std::size_t n = arr.size();
  rep.lines = n;

  std::vector<std::vector<bool>> dup(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (arr[i].same_locus(arr[j])) {
        rep.duplicates.emplace_back(int(i), int(j));
        dup[i][j] = dup[j][i] = true;
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dup[i][j]) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (dup[i][k] || dup[j][k]) continue;
        if (det3(arr[i], arr[j], arr[k]) != 0) continue;
        bool all_parallel = arr[i].parallel_to(arr[j]) && arr[j].parallel_to(arr[k]);
        if (!all_parallel) rep.concurrent_triples.push_back({int(i), int(j), int(k)});
      }
    }
  rep.nodal = rep.duplicates.empty() && rep.concurrent_triples.empty();

  // Parallel classes keyed by the normalized normal (a, b).
  std::map<std::pair<std::string, std::string>, std::size_t> classes;
  for (const Line& l : arr.lines()) ++classes[{to_string(l.a()), to_string(l.b())}];
  for (const auto& [key, size] : classes) {
    rep.parallel_pairs += static_cast<int>(size * (size - 1) / 2);
    rep.largest_parallel_class = std::max(rep.largest_parallel_class, size);
  }
  rep.parallel_condition = rep.largest_parallel_class <= 2;
  return rep;
}

}  // namespace dplane
