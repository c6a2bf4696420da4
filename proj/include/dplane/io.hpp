#pragma once

#include "dplane/chamber_complex.hpp"
#include "dplane/geometry.hpp"
#include "dplane/gram.hpp"
#include "dplane/infinity_model.hpp"
#include "dplane/lattice.hpp"
#include "dplane/orientation.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace dplane {

inline constexpr const char* kReportSchema = "dplane.report/1";
inline constexpr const char* kPredictionSchema = "dplane.prediction/1";

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string token, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

// Arrangement files: one line per geometric line, "a b c" meaning
// a*x + b*y + c = 0, rationals as "p/q" or integers; '#' starts a comment.
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement(const std::string& text);
Arrangement read_arrangement_file(const std::string& path);
std::string serialize_arrangement(const Arrangement& arr);

/// "standard", or one sign per bounded chamber: "+-+", "+,-,+" or "1,-1,1".
OrientationAssignment parse_orientation(const std::string& text, std::size_t bounded_count);

struct AnalysisOptions {
  std::optional<std::string> orientation;  // as accepted by parse_orientation
  bool run_oracle = false;
};

struct Analysis {
  Arrangement arrangement;
  ValidationReport validation;
  ChamberComplex complex;
  OrientationAssignment orientation{std::vector<int>{}};
  GramMatrix gram;
  LatticeInvariants invariants;
  std::optional<Prediction> prediction;  // present when the parallel condition holds and N >= 3
  std::optional<CheckReport> check;
  std::optional<bool> oracle_agrees;
};

/// Full pipeline. Throws NotNodal for non-nodal input.
Analysis analyze(const Arrangement& arr, const AnalysisOptions& options = {});

nlohmann::json to_json(const Analysis& analysis);
nlohmann::json to_json(const Prediction& prediction);
nlohmann::json integer_json(const Integer& v);

/// Deterministic SVG: lines clipped to a box around all vertices, bounded
/// chambers shaded and labelled "id:n", vertices marked.
std::string render_svg(const ChamberComplex& cc);

}  // namespace dplane
