// dplane: intersection lattices of double planes branched along real line
// arrangements.
//
// Exit codes: 0 success, 1 usage or parse error, 2 invalid arrangement
// (not nodal, or a parallel class of three or more lines where the closed
// forms need at most two), 3 cross-check failure.

#include "dplane/generator.hpp"
#include "dplane/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInvalid = 2, kMismatch = 3 };

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string sig_text(const dplane::Inertia& s) {
  return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ")";
}

std::string summary(const dplane::Analysis& a) {
  std::ostringstream os;
  const auto& v = a.validation;
  const auto& cc = a.complex;
  const auto& inv = a.invariants;
  os << "lines            " << v.lines << "\n";
  os << "nodal            " << (v.nodal ? "yes" : "no") << "\n";
  os << "parallel pairs   " << v.parallel_pairs << (v.parallel_condition ? "" : "  (a class has >= 3 lines)") << "\n";
  os << "vertices         " << cc.vertices().size() << "\n";
  os << "bounded chambers " << cc.bounded_count() << "\n";
  os << "n-gon profile   ";
  for (const auto& [n, count] : cc.ngon_profile()) os << ' ' << n << ':' << count;
  os << "\n";
  os << "orientation      " << (a.orientation.is_standard() ? "standard" : "custom") << "\n";
  os << "H2 rank          " << inv.ambient_rank << "\n";
  os << "kernel rank      " << inv.kernel_rank << "\n";
  os << "quotient rank    " << inv.nondeg_rank << "\n";
  os << "signature        " << sig_text(inv.signature) << "\n";
  os << "disc             " << inv.disc.to_string() << "\n";
  os << "|det|            " << inv.det_abs.str() << "\n";
  if (a.prediction) {
    const auto& p = *a.prediction;
    os << "predicted perp   rank " << p.perp.rank << ", signature (" << p.perp.signature.positive << ", "
       << p.perp.signature.negative << ")\n";
    os << "disc(H_inf)      " << p.infinity.disc.to_string() << "\n";
  }
  if (a.check) {
    os << "rank/signature   " << (a.check->rank_signature_match ? "match" : "MISMATCH") << "\n";
    os << "sub-quotient     " << (a.check->subquotient ? "yes" : "NO") << "\n";
    os << "disc isomorphic  " << (a.check->disc_isomorphic ? "yes" : "no") << " (observation)\n";
  }
  if (a.oracle_agrees) os << "reversal oracle  " << (*a.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection lattices of double planes branched along real line arrangements"};
  app.require_subcommand(1);

  std::string input, out_path, orientation;
  bool oracle = false, as_json = false;
  long long n_lines = 0, n_pairs = 0;
  std::uint64_t seed = 1;
  int bound = 64;

  auto* analyze = app.add_subcommand("analyze", "Gram matrix and lattice invariants of an arrangement file");
  analyze->add_option("file", input, "arrangement file")->required();
  analyze->add_option("--orientation", orientation, "'standard' or one sign per bounded chamber, e.g. +-+");
  analyze->add_flag("--oracle", oracle, "also verify the Gram matrix through the orientation-reversal base change");
  analyze->add_flag("--json", as_json, "emit the JSON report");
  analyze->add_option("--out", out_path, "output path (default stdout)");

  auto* generate = app.add_subcommand("generate", "write a random nodal arrangement");
  generate->add_option("N", n_lines, "number of lines")->required();
  generate->add_option("p", n_pairs, "number of parallel pairs")->required();
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--bound", bound, "coefficient bound");
  generate->add_option("--out", out_path, "output path (default stdout)");

  auto* predict = app.add_subcommand("predict", "closed-form ranks, signatures and discriminant groups");
  predict->add_option("N", n_lines, "number of lines")->required();
  predict->add_option("p", n_pairs, "number of parallel pairs")->required();
  predict->add_flag("--json", as_json, "emit JSON");

  auto* check = app.add_subcommand("check", "compare computed invariants with the closed forms");
  check->add_option("file", input, "arrangement file")->required();
  check->add_flag("--json", as_json, "emit the JSON report");
  check->add_option("--out", out_path, "output path (default stdout)");

  auto* render = app.add_subcommand("render", "draw the arrangement as SVG");
  render->add_option("file", input, "arrangement file")->required();
  render->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) {
      dplane::GenSpec spec;
      spec.lines = static_cast<int>(n_lines);
      spec.parallel_pairs = static_cast<int>(n_pairs);
      spec.seed = seed;
      spec.coefficient_bound = bound;
      write_output(dplane::serialize_arrangement(dplane::random_arrangement(spec)), out_path);
      return kOk;
    }
    if (*predict) {
      const auto pr = dplane::predict(n_lines, n_pairs);
      if (as_json) {
        std::cout << dplane::to_json(pr).dump(2) << "\n";
      } else {
        std::cout << "bounded chambers " << pr.counts.bounded_chambers << ", nodes " << pr.counts.nodes << "\n"
                  << "H2 rank          " << pr.counts.bounded_chambers + pr.counts.nodes << "\n"
                  << "ambient          rank " << pr.ambient.rank << ", signature (" << pr.ambient.signature.positive
                  << ", " << pr.ambient.signature.negative << ")\n"
                  << "H_inf            rank " << pr.infinity.rank << ", signature (" << pr.infinity.signature.positive
                  << ", " << pr.infinity.signature.negative << "), disc " << pr.infinity.disc.to_string() << "\n"
                  << "perp             rank " << pr.perp.rank << ", signature (" << pr.perp.signature.positive << ", "
                  << pr.perp.signature.negative << ")\n";
      }
      return kOk;
    }

    const dplane::Arrangement arr = dplane::read_arrangement_file(input);
    if (arr.size() == 0) {
      std::cerr << "error: no lines\n";
      return kUsage;
    }

    if (*render) {
      const auto v = dplane::validate(arr);
      if (!v.nodal) {
        std::cerr << "error: arrangement is not nodal\n";
        return kInvalid;
      }
      write_output(dplane::render_svg(dplane::ChamberComplex::build(arr)), out_path);
      return kOk;
    }

    const auto v = dplane::validate(arr);
    if (!v.nodal) {
      std::cerr << "error: arrangement is not nodal";
      if (!v.concurrent_triples.empty()) {
        const auto& t = v.concurrent_triples.front();
        std::cerr << " (lines " << t[0] << ", " << t[1] << ", " << t[2] << " are concurrent)";
      }
      if (!v.duplicates.empty()) std::cerr << " (duplicate lines)";
      std::cerr << "\n";
      return kInvalid;
    }

    if (*analyze) {
      dplane::AnalysisOptions opts;
      if (!orientation.empty()) opts.orientation = orientation;
      opts.run_oracle = oracle;
      dplane::Analysis a;
      try {
        a = dplane::analyze(arr, opts);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      write_output(as_json ? dplane::to_json(a).dump(2) + "\n" : summary(a), out_path);
      if (a.oracle_agrees && !*a.oracle_agrees) return kMismatch;
      return kOk;
    }

    if (*check) {
      if (v.lines < 3 || !v.parallel_condition) {
        std::cerr << "error: the closed forms need N >= 3 lines and at most two lines per parallel class"
                  << " (largest class has " << v.largest_parallel_class << ")\n";
        return kInvalid;
      }
      const dplane::Analysis a = dplane::analyze(arr);
      write_output(as_json ? dplane::to_json(a).dump(2) + "\n" : summary(a), out_path);
      bool ok = a.check && a.check->passed();
      if (arr.size() % 2 == 1 && a.invariants.kernel_rank != 0) {
        std::cerr << "error: odd N but the intersection form is degenerate\n";
        ok = false;
      }
      return ok ? kOk : kMismatch;
    }
  } catch (const dplane::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const dplane::NotNodal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
