#include "dplane/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dplane {

ParseError::ParseError(int line, int column, std::string token, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

Arrangement parse_arrangement(std::istream& in) {
  Arrangement arr;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string text = raw.substr(0, raw.find('#'));
    std::vector<std::pair<std::string, int>> tokens;  // token, 1-based column
    for (std::size_t i = 0; i < text.size();) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      tokens.emplace_back(text.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      const auto& [tok, col] = tokens.size() > 3 ? tokens[3] : tokens.back();
      throw ParseError(line_no, col, tok, "expected three coefficients 'a b c', got " + std::to_string(tokens.size()));
    }
    std::array<Rational, 3> coef;
    for (std::size_t k = 0; k < 3; ++k) {
      try {
        coef[k] = parse_rational(tokens[k].first);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, tokens[k].second, tokens[k].first, e.what());
      }
    }
    if (coef[0] == 0 && coef[1] == 0)
      throw ParseError(line_no, tokens[0].second, tokens[0].first, "a and b are both zero");
    arr.add(Line(coef[0], coef[1], coef[2]));
  }
  return arr;
}

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_arrangement(in);
}

std::string serialize_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  os << "# " << arr.size() << " lines: a b c  (a*x + b*y + c = 0)\n";
  for (const Line& l : arr.lines()) os << to_string(l.a()) << ' ' << to_string(l.b()) << ' ' << to_string(l.c()) << '\n';
  return os.str();
}

OrientationAssignment parse_orientation(const std::string& text, std::size_t bounded_count) {
  if (text == "standard") return OrientationAssignment::standard(bounded_count);
  std::vector<int> signs;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch == '+') signs.push_back(1);
      else if (ch == '-') signs.push_back(-1);
      else throw std::invalid_argument(std::string("bad orientation sign '") + ch + "'");
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "+" || tok == "+1" || tok == "1") signs.push_back(1);
      else if (tok == "-" || tok == "-1") signs.push_back(-1);
      else throw std::invalid_argument("bad orientation sign '" + tok + "'");
    }
  }
  if (signs.size() != bounded_count)
    throw std::invalid_argument("orientation has " + std::to_string(signs.size()) + " signs but there are " +
                                std::to_string(bounded_count) + " bounded chambers");
  return OrientationAssignment(std::move(signs));
}

Analysis analyze(const Arrangement& arr, const AnalysisOptions& options) {
  Analysis a;
  a.arrangement = arr;
  a.validation = validate(arr);
  a.complex = ChamberComplex::build(arr);
  const std::size_t nb = a.complex.bounded_count();
  a.orientation = options.orientation ? parse_orientation(*options.orientation, nb)
                                      : OrientationAssignment::standard(nb);
  a.gram = gram_matrix(a.complex, a.orientation);
  a.invariants = lattice_invariants(a.gram.entries);
  if (a.validation.lattice_ready()) {
    a.prediction = predict(static_cast<long long>(arr.size()), a.validation.parallel_pairs);
    a.check = cross_check(a.invariants, *a.prediction);
  }
  if (options.run_oracle) {
    const GramMatrix standard =
        a.orientation.is_standard() ? a.gram : gram_matrix(a.complex, OrientationAssignment::standard(nb));
    a.oracle_agrees = gram_via_flip_oracle(a.complex, standard, a.orientation).entries == a.gram.entries;
  }
  return a;
}

nlohmann::json integer_json(const Integer& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();
}

namespace {

nlohmann::json group_json(const AbelianGroup& g) {
  auto arr = nlohmann::json::array();
  for (const auto& d : g.invariant_factors()) arr.push_back(integer_json(d));
  return {{"invariant_factors", arr}, {"order", integer_json(g.order())}, {"text", g.to_string()}};
}

nlohmann::json rank_signature_json(const RankSignature& rs) {
  return {{"rank", rs.rank}, {"signature", {rs.signature.positive, rs.signature.negative}}};
}

nlohmann::json point_json(const Point& p) { return {to_string(p.x), to_string(p.y)}; }

}  // namespace

nlohmann::json to_json(const Prediction& pr) {
  return {{"schema", kPredictionSchema},
          {"lines", pr.lines},
          {"parallel_pairs", pr.parallel_pairs},
          {"completed_lines", pr.completed_lines},
          {"bounded_chambers", pr.counts.bounded_chambers},
          {"nodes", pr.counts.nodes},
          {"ambient", rank_signature_json(pr.ambient)},
          {"infinity",
           {{"rank", pr.infinity.rank},
            {"signature", {pr.infinity.signature.positive, pr.infinity.signature.negative}},
            {"disc", group_json(pr.infinity.disc)}}},
          {"perp", rank_signature_json(pr.perp)}};
}

nlohmann::json to_json(const Analysis& a) {
  using nlohmann::json;
  json lines = json::array();
  for (const Line& l : a.arrangement.lines())
    lines.push_back({{"id", l.id()}, {"a", to_string(l.a())}, {"b", to_string(l.b())}, {"c", to_string(l.c())}});

  json duplicates = json::array(), triples = json::array();
  for (const auto& [i, j] : a.validation.duplicates) duplicates.push_back({i, j});
  for (const auto& t : a.validation.concurrent_triples) triples.push_back({t[0], t[1], t[2]});

  const ChamberComplex& cc = a.complex;
  json profile = json::object();
  for (const auto& [n, count] : cc.ngon_profile()) profile[std::to_string(n)] = count;
  json bounded = json::array();
  for (int id : cc.bounded_chamber_ids()) {
    const Chamber& c = cc.chamber(id);
    bounded.push_back({{"id", id},
                       {"ngon", c.ngon()},
                       {"vertices", c.vertices},
                       {"boundary_edges", c.boundary},
                       {"sign", chamber_sign(a.arrangement, c)},
                       {"interior_point", point_json(c.interior_point)}});
  }
  json vertices = json::array();
  for (std::size_t v = 0; v < cc.vertices().size(); ++v)
    vertices.push_back(
        {{"id", v}, {"lines", {cc.vertices()[v].lines[0], cc.vertices()[v].lines[1]}}, {"point", point_json(cc.vertices()[v].point)}});

  json basis = json::array();
  for (std::size_t i = 0; i < a.gram.basis.size(); ++i) {
    const auto& e = a.gram.basis[i];
    if (const auto* c = std::get_if<ChamberClass>(&e))
      basis.push_back({{"index", i}, {"kind", "chamber"}, {"id", c->chamber}});
    else
      basis.push_back({{"index", i}, {"kind", "vertex"}, {"id", std::get<VertexClass>(e).vertex}});
  }
  json gram = json::array();
  for (Eigen::Index i = 0; i < a.gram.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.gram.entries.cols(); ++j) row.push_back(integer_json(a.gram.entries(i, j)));
    gram.push_back(std::move(row));
  }

  const LatticeInvariants& inv = a.invariants;
  json factors = json::array();
  for (const auto& d : inv.invariant_factors) factors.push_back(integer_json(d));

  json doc = {
      {"schema", kReportSchema},
      {"arrangement", {{"lines", lines}}},
      {"validation",
       {{"lines", a.validation.lines},
        {"nodal", a.validation.nodal},
        {"parallel_pairs", a.validation.parallel_pairs},
        {"largest_parallel_class", a.validation.largest_parallel_class},
        {"parallel_condition", a.validation.parallel_condition},
        {"duplicates", duplicates},
        {"concurrent_triples", triples}}},
      {"complex",
       {{"vertices", cc.vertices().size()},
        {"edges", cc.edges().size()},
        {"chambers", cc.chambers().size()},
        {"bounded_chambers", cc.bounded_count()},
        {"ngon_profile", profile},
        {"vertex_list", vertices},
        {"bounded", bounded}}},
      {"orientation", {{"standard", a.orientation.is_standard()}, {"signs", a.orientation.signs()}}},
      {"basis", basis},
      {"gram", gram},
      {"invariants",
       {{"rank", inv.ambient_rank},
        {"kernel_rank", inv.kernel_rank},
        {"nondeg_rank", inv.nondeg_rank},
        {"signature", {inv.signature.positive, inv.signature.negative}},
        {"invariant_factors", factors},
        {"disc", group_json(inv.disc)},
        {"det_abs", integer_json(inv.det_abs)}}},
      {"prediction", a.prediction ? to_json(*a.prediction) : json(nullptr)},
      {"cross_check", a.check ? json{{"rank_signature", a.check->rank_signature_match},
                                     {"subquotient", a.check->subquotient},
                                     {"disc_isomorphic", a.check->disc_isomorphic},
                                     {"passed", a.check->passed()},
                                     {"detail", a.check->detail}}
                              : json(nullptr)},
  };
  if (a.oracle_agrees) doc["oracle"] = {{"agrees", *a.oracle_agrees}};
  return doc;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Palette for bounded chambers by n-gon size.
const char* fill_for(std::size_t n) {
  static const char* colors[] = {"#fde2a7", "#b9e3c6", "#aecbeb", "#e6bde3", "#f4b6a8", "#d8d8a0"};
  return colors[(n < 3 ? 0 : n - 3) % 6];
}

}  // namespace

std::string render_svg(const ChamberComplex& cc) {
  const Arrangement& arr = cc.arrangement();
  if (arr.size() == 0) throw std::invalid_argument("no lines");

  // Exact bounding box of the vertices, widened by a margin.
  Rational xmin, xmax, ymin, ymax;
  if (cc.vertices().empty()) {
    const Point p = arr[0].some_point();
    xmin = xmax = p.x;
    ymin = ymax = p.y;
    for (const Line& l : arr.lines()) {
      const Point q = l.some_point();
      xmin = std::min(xmin, q.x);
      xmax = std::max(xmax, q.x);
      ymin = std::min(ymin, q.y);
      ymax = std::max(ymax, q.y);
    }
  } else {
    xmin = xmax = cc.vertices()[0].point.x;
    ymin = ymax = cc.vertices()[0].point.y;
    for (const Vertex& v : cc.vertices()) {
      xmin = std::min(xmin, v.point.x);
      xmax = std::max(xmax, v.point.x);
      ymin = std::min(ymin, v.point.y);
      ymax = std::max(ymax, v.point.y);
    }
  }
  Rational span = std::max({xmax - xmin, ymax - ymin, Rational(1)});
  const Rational margin = span / 5;
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;
  span = std::max(xmax - xmin, ymax - ymin);

  const double size = 800.0;
  const double scale = size / to_double(span);
  const double x0 = to_double(xmin), y1 = to_double(ymax);
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return (y1 - y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int id : cc.bounded_chamber_ids()) {
    const Chamber& c = cc.chamber(id);
    const double cx = to_double(c.interior_point.x), cy = to_double(c.interior_point.y);
    std::vector<std::pair<double, double>> pts;
    for (int v : c.vertices) pts.emplace_back(to_double(cc.vertices()[v].point.x), to_double(cc.vertices()[v].point.y));
    std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
      return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
    });
    os << "<polygon class=\"chamber\" data-id=\"" << id << "\" fill=\"" << fill_for(c.ngon())
       << "\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? " " : "") << fmt(sx(pts[k].first)) << ',' << fmt(sy(pts[k].second));
    os << "\"/>\n";
  }

  // Clip each line to the box exactly, then draw.
  for (const Line& l : arr.lines()) {
    std::vector<Point> hits;
    auto try_point = [&](const Point& p) {
      if (p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax &&
          std::find(hits.begin(), hits.end(), p) == hits.end())
        hits.push_back(p);
    };
    if (l.b() != 0) {
      for (const Rational& x : {xmin, xmax}) try_point({x, -(l.a() * x + l.c()) / l.b()});
    }
    if (l.a() != 0) {
      for (const Rational& y : {ymin, ymax}) try_point({-(l.b() * y + l.c()) / l.a(), y});
    }
    if (hits.size() < 2) continue;
    os << "<line class=\"arrangement-line\" data-id=\"" << l.id() << "\" x1=\"" << fmt(sx(to_double(hits[0].x)))
       << "\" y1=\"" << fmt(sy(to_double(hits[0].y))) << "\" x2=\"" << fmt(sx(to_double(hits[1].x))) << "\" y2=\""
       << fmt(sy(to_double(hits[1].y))) << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  }

  for (std::size_t v = 0; v < cc.vertices().size(); ++v) {
    const Point& p = cc.vertices()[v].point;
    os << "<circle class=\"vertex\" data-id=\"" << v << "\" cx=\"" << fmt(sx(to_double(p.x))) << "\" cy=\""
       << fmt(sy(to_double(p.y))) << "\" r=\"3\" fill=\"#c0392b\"/>\n";
  }
  for (int id : cc.bounded_chamber_ids()) {
    const Chamber& c = cc.chamber(id);
    os << "<text class=\"label\" x=\"" << fmt(sx(to_double(c.interior_point.x))) << "\" y=\""
       << fmt(sy(to_double(c.interior_point.y))) << "\" font-size=\"12\" text-anchor=\"middle\">" << id << ':'
       << c.ngon() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dplane
