// Command-line front end: parses a quiver description (JSON), dispatches the
// requested computation, and renders exact results as JSON, plain text, or
// LaTeX. Exit codes: 0 success, 1 input error, 2 non-generic stability
// (without --force), 3 verification failure, 4 internal assertion.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiverdt/dt.hpp"
#include "quiverdt/json_io.hpp"
#include "quiverdt/loop_ic.hpp"
#include "quiverdt/strata.hpp"
#include "quiverdt/text_format.hpp"

namespace {

using namespace quiverdt;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNonGeneric = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::string input = "-";
  std::string format = "json";
  bool force = false;

  std::string box_arg;
  std::string slope_arg;
  std::string framing_arg;
  std::string dim_arg;
  std::string point_arg;
  bool verify = false;
  long long loops = 0;
  long long loop_dim = 0;
};

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw QuiverInputError("cannot parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw QuiverInputError(what + " must not be empty");
  return out;
}

DimVector parse_dim_vector(const std::string& text, std::size_t expected,
                           const std::string& what) {
  std::vector<long long> entries = parse_int_list(text, what);
  if (entries.size() == 1 && expected > 1) entries.assign(expected, entries.front());
  if (entries.size() != expected)
    throw QuiverInputError(what + " needs " + std::to_string(expected) + " entries");
  for (long long x : entries)
    if (x < 0) throw QuiverInputError(what + " entries must be nonnegative");
  return DimVector(std::move(entries));
}

// Point syntax: parts joined by '+', each part "d_1,...,d_n" with an optional
// "^multiplicity", e.g. "1,1^2+1,0".
PolystablePoint parse_point(const std::string& text, std::size_t vertices) {
  PolystablePoint point;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    long long mult = 1;
    std::string dims = part;
    if (const auto caret = part.find('^'); caret != std::string::npos) {
      dims = part.substr(0, caret);
      try {
        mult = std::stoll(part.substr(caret + 1));
      } catch (const std::exception&) {
        throw QuiverInputError("cannot parse multiplicity in point part '" + part + "'");
      }
    }
    if (mult < 1) throw QuiverInputError("point multiplicities must be >= 1");
    point.parts.emplace_back(parse_dim_vector(dims, vertices, "point dimension vector"), mult);
  }
  if (point.parts.empty()) throw QuiverInputError("point specification is empty");
  return point;
}

QuiverSpec load_input(const Options& opt) {
  if (opt.input == "-") return parse_quiver_spec(std::cin);
  std::ifstream in(opt.input);
  if (!in) throw QuiverInputError("cannot open input file '" + opt.input + "'");
  return parse_quiver_spec(in);
}

Stability effective_theta(const QuiverSpec& spec) {
  return spec.theta ? *spec.theta : Stability::trivial(spec.quiver.size());
}

Json genericity_to_json(const GenericityReport& report) {
  Json j;
  j["generic"] = report.ok();
  j["status"] = report.status_name();
  if (report.witness) {
    Json w;
    w["d"] = dim_vector_to_json(report.witness->d);
    w["e"] = dim_vector_to_json(report.witness->e);
    w["pairing"] = report.witness->pairing;
    j["witness"] = std::move(w);
  }
  return j;
}

Json table_entries_to_json(const DtTable& table) {
  Json entries = Json::array();
  for (const auto& [d, value] : table.entries) {
    Json e;
    e["d"] = dim_vector_to_json(d);
    e["value"] = fraction_to_json(value);
    entries.push_back(std::move(e));
  }
  return entries;
}

Json series_to_json(const FractionSeries& s) {
  Json entries = Json::array();
  for (const auto& [d, value] : s.coefficients()) {
    Json e;
    e["d"] = dim_vector_to_json(d);
    e["value"] = fraction_to_json(value);
    entries.push_back(std::move(e));
  }
  return entries;
}

void render_table_text(const DtTable& table, bool latex, std::ostream& out) {
  for (const auto& [d, value] : table.entries)
    out << d.str() << ": " << (latex ? to_latex(value) : to_pretty(value)) << "\n";
}

// Deterministic rendering: JSON documents are emitted with two-space
// indentation and insertion-ordered keys.
void emit(const Json& doc, const Options& opt, std::ostream& out) {
  if (opt.format == "json") out << doc.dump(2) << "\n";
}

int warn_or_fail_genericity(const GenericityReport& report, const Options& opt,
                            std::vector<std::string>& warnings) {
  if (report.ok()) return kExitOk;
  std::string msg = "stability is not generic within the box";
  if (report.witness)
    msg += ": <" + report.witness->d.str() + "," + report.witness->e.str() +
           "> = " + std::to_string(report.witness->pairing);
  if (!opt.force) {
    std::cerr << "error: " << msg << " (use --force to compute anyway)\n";
    return kExitNonGeneric;
  }
  const std::string warning = msg + "; computed under --force, theorems do not apply";
  std::cerr << "warning: " << warning << "\n";
  warnings.push_back(warning);
  return kExitOk;
}

int cmd_dt(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const Stability theta = effective_theta(spec);
  const DimVector box = parse_dim_vector(opt.box_arg, spec.quiver.size(), "--box");
  std::vector<std::string> warnings;
  const GenericityReport report = generic_check(spec.quiver, theta, box);
  if (int rc = warn_or_fail_genericity(report, opt, warnings)) return rc;

  StackClassTable classes(spec.quiver, theta);
  DtTable table;
  Json result;
  if (!opt.slope_arg.empty()) {
    const auto mu = Rational::parse(opt.slope_arg);
    if (!mu) throw QuiverInputError("cannot parse --slope '" + opt.slope_arg + "'");
    table = dt_slope(classes, *mu, box, true);
    result["slope"] = mu->str();
  } else {
    table = dt_all(classes, box, true);
  }
  result["theta"] = theta.weights();
  result["box"] = dim_vector_to_json(box);
  result["genericity"] = genericity_to_json(report);
  result["entries"] = table_entries_to_json(table);
  const IntegralityReport integral = check_integral(table);
  result["integral"] = integral.ok;

  if (opt.format == "json") {
    emit(make_result_document(true, "dt", result, warnings), opt, std::cout);
  } else {
    render_table_text(table, opt.format == "latex", std::cout);
  }
  return kExitOk;
}

int cmd_loop_ic(const Options& opt) {
  if (opt.loops < 2) throw QuiverInputError("--loops must be >= 2");
  if (opt.loop_dim < 1) throw QuiverInputError("--dim must be >= 1");
  const VPolynomial p = ic_poincare_loop(opt.loops, opt.loop_dim);
  if (opt.format == "json") {
    Json result;
    result["loops"] = opt.loops;
    result["dim"] = opt.loop_dim;
    result["value"] = polynomial_to_json(p);
    emit(make_result_document(true, "loop-ic", result), opt, std::cout);
  } else {
    std::cout << (opt.format == "latex" ? to_latex(p) : to_pretty(p)) << "\n";
  }
  return kExitOk;
}

int cmd_check_generic(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const Stability theta = effective_theta(spec);
  const DimVector box = parse_dim_vector(opt.box_arg, spec.quiver.size(), "--box");
  const GenericityReport report = generic_check(spec.quiver, theta, box);
  if (opt.format == "json") {
    Json result = genericity_to_json(report);
    result["theta"] = theta.weights();
    result["box"] = dim_vector_to_json(box);
    emit(make_result_document(report.ok(), "check-generic", result), opt, std::cout);
  } else {
    std::cout << report.status_name();
    if (report.witness)
      std::cout << " witness <" << report.witness->d.str() << "," << report.witness->e.str()
                << "> = " << report.witness->pairing;
    std::cout << "\n";
  }
  return report.ok() ? kExitOk : kExitNonGeneric;
}

int cmd_framed(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const Stability theta = effective_theta(spec);
  const DimVector box = parse_dim_vector(opt.box_arg, spec.quiver.size(), "--box");
  const DimVector f = parse_dim_vector(opt.framing_arg, spec.quiver.size(), "--framing");
  std::vector<std::string> warnings;
  const GenericityReport report = generic_check(spec.quiver, theta, box);
  if (int rc = warn_or_fail_genericity(report, opt, warnings)) return rc;

  StackClassTable classes(spec.quiver, theta);
  std::optional<Rational> mu;
  if (!opt.slope_arg.empty()) {
    mu = Rational::parse(opt.slope_arg);
    if (!mu) throw QuiverInputError("cannot parse --slope '" + opt.slope_arg + "'");
  }

  Json result;
  result["theta"] = theta.weights();
  result["box"] = dim_vector_to_json(box);
  result["framing"] = dim_vector_to_json(f);
  result["genericity"] = genericity_to_json(report);

  std::vector<Rational> slopes;
  if (mu) {
    slopes.push_back(*mu);
  } else {
    for (const DimVector& d : box_lattice(box))
      if (!d.is_zero()) {
        const Rational s = slope(theta, d);
        if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
      }
  }
  Json series = Json::array();
  for (const Rational& s : slopes) {
    const FractionSeries p = framed_ic_series(classes, s, f, box, true);
    Json block;
    block["slope"] = s.str();
    block["entries"] = series_to_json(p);
    series.push_back(std::move(block));
    if (opt.format != "json") {
      std::cout << "slope " << s.str() << ":\n";
      for (const auto& [d, c] : p.coefficients())
        std::cout << "  " << d.str() << ": " << (opt.format == "latex" ? to_latex(c) : to_pretty(c))
                  << "\n";
    }
  }
  result["series"] = std::move(series);

  bool ok = true;
  if (opt.verify) {
    const DtPtReport rep = dtpt_verify(classes, mu, f, box, true);
    ok = rep.all_equal;
    Json verify;
    verify["equal"] = rep.all_equal;
    Json per_slope = Json::array();
    for (const auto& sres : rep.slopes) {
      Json b;
      b["slope"] = sres.mu.str();
      b["equal"] = sres.primary_equal;
      b["alternative_checked"] = sres.alternative_checked;
      if (sres.alternative_checked) b["alternative_equal"] = sres.alternative_equal;
      Json mism = Json::array();
      for (const auto& m : sres.mismatches) {
        Json mm;
        mm["d"] = dim_vector_to_json(m.d);
        mm["framed_side"] = fraction_to_json(m.framed_side);
        mm["sym_side"] = fraction_to_json(m.sym_side);
        mism.push_back(std::move(mm));
      }
      b["mismatches"] = std::move(mism);
      per_slope.push_back(std::move(b));
    }
    verify["slopes"] = std::move(per_slope);
    result["verify"] = std::move(verify);
    if (opt.format != "json")
      std::cout << "verification: " << (ok ? "equal" : "MISMATCH") << "\n";
  }
  emit(make_result_document(ok, "framed", result, warnings), opt, std::cout);
  return ok ? kExitOk : kExitVerification;
}

int cmd_local_dt(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const Stability theta = effective_theta(spec);
  const PolystablePoint point = parse_point(opt.point_arg, spec.quiver.size());
  std::vector<std::string> warnings;
  const DimVector ambient = point.ambient_dimension();
  const Rational mu = slope(theta, point.parts.front().first);
  const GenericityReport report = generic_check(spec.quiver, theta, ambient, mu);
  if (int rc = warn_or_fail_genericity(report, opt, warnings)) return rc;

  const LocalDtResult res = local_dt(spec.quiver, theta, point, true);
  if (opt.format == "json") {
    Json result;
    Json parts = Json::array();
    for (const auto& [dk, mk] : point.parts) {
      Json p;
      p["d"] = dim_vector_to_json(dk);
      p["m"] = mk;
      parts.push_back(std::move(p));
    }
    result["point"] = std::move(parts);
    result["ext_quiver"] = quiver_to_json(res.ext);
    result["value"] = fraction_to_json(res.value);
    emit(make_result_document(true, "local-dt", result, warnings), opt, std::cout);
  } else {
    std::cout << (opt.format == "latex" ? to_latex(res.value) : to_pretty(res.value)) << "\n";
  }
  return kExitOk;
}

int cmd_strata(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const Stability theta = effective_theta(spec);
  const DimVector d = parse_dim_vector(opt.dim_arg, spec.quiver.size(), "--dim");
  const DimVector f = parse_dim_vector(opt.framing_arg, spec.quiver.size(), "--framing");
  std::vector<std::string> warnings;
  const GenericityReport report = generic_check(spec.quiver, theta, d, slope(theta, d));
  if (int rc = warn_or_fail_genericity(report, opt, warnings)) return rc;

  const VirtualSmallnessReport rep = verify_virtual_smallness(spec.quiver, theta, d, f, true);
  const bool ok = rep.all_pass && rep.equality_only_at_dense;
  if (opt.format == "json") {
    Json result;
    result["d"] = dim_vector_to_json(d);
    result["framing"] = dim_vector_to_json(f);
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      Json r;
      Json parts = Json::array();
      for (const auto& [dk, mk] : row.xi.parts) {
        Json p;
        p["d"] = dim_vector_to_json(dk);
        p["m"] = mk;
        parts.push_back(std::move(p));
      }
      r["parts"] = std::move(parts);
      r["codim"] = row.codim;
      r["fiber_bound"] = row.fiber_bound.str();
      r["rhs"] = row.rhs.str();
      r["pass"] = row.pass;
      r["equality"] = row.equality;
      rows.push_back(std::move(r));
    }
    result["rows"] = std::move(rows);
    result["all_pass"] = rep.all_pass;
    result["equality_only_at_dense"] = rep.equality_only_at_dense;
    emit(make_result_document(ok, "strata", result, warnings), opt, std::cout);
  } else {
    for (const auto& row : rep.rows)
      std::cout << row.xi.str() << ": " << row.fiber_bound.str() << " <= " << row.rhs.str()
                << (row.equality ? " (equality)" : "") << (row.pass ? "" : " VIOLATED") << "\n";
  }
  return ok ? kExitOk : kExitVerification;
}

int cmd_nullcone(const Options& opt) {
  const QuiverSpec spec = load_input(opt);
  const DimVector d = parse_dim_vector(opt.dim_arg, spec.quiver.size(), "--dim");
  const Rational bound = nullcone_bound(spec.quiver, d);
  if (opt.format == "json") {
    Json result;
    result["d"] = dim_vector_to_json(d);
    result["value"] = bound.str();
    emit(make_result_document(true, "nullcone-bound", result), opt, std::cout);
  } else {
    std::cout << bound.str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact Donaldson-Thomas / intersection cohomology calculator for quivers"};
  app.require_subcommand(1);
  app.add_option("-i,--input", opt.input, "Quiver JSON file, or - for standard input");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "latex"}));
  app.add_flag("--force", opt.force, "Compute even for non-generic stabilities");

  CLI::App* dt = app.add_subcommand("dt", "DT invariants up to a box");
  dt->add_option("--box", opt.box_arg, "Truncation box, comma-separated")->required();
  dt->add_option("--slope", opt.slope_arg, "Restrict to one slope, e.g. 1/2");

  CLI::App* loop_ic = app.add_subcommand("loop-ic", "Intersection Betti polynomial of matrix invariants");
  loop_ic->add_option("--loops", opt.loops, "Number of loops m >= 2")->required();
  loop_ic->add_option("--dim", opt.loop_dim, "Dimension d >= 1")->required();

  CLI::App* generic = app.add_subcommand("check-generic", "Check genericity within a box");
  generic->add_option("--box", opt.box_arg, "Truncation box")->required();

  CLI::App* framed = app.add_subcommand("framed", "Framed moduli series");
  framed->add_option("--framing", opt.framing_arg, "Framing vector")->required();
  framed->add_option("--box", opt.box_arg, "Truncation box")->required();
  framed->add_option("--slope", opt.slope_arg, "Restrict to one slope");
  framed->add_flag("--verify", opt.verify, "Cross-check against the DT route");

  CLI::App* local = app.add_subcommand("local-dt", "DT function value at a polystable point");
  local->add_option("--point", opt.point_arg, "Point, e.g. \"1,1^2+1,0\"")->required();

  CLI::App* strata = app.add_subcommand("strata", "Virtual smallness verifier");
  strata->add_option("--dim", opt.dim_arg, "Dimension vector")->required();
  strata->add_option("--framing", opt.framing_arg, "Framing vector")->required();

  CLI::App* nullcone = app.add_subcommand("nullcone-bound", "Nullcone dimension bound");
  nullcone->add_option("--dim", opt.dim_arg, "Dimension vector")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (dt->parsed()) return cmd_dt(opt);
    if (loop_ic->parsed()) return cmd_loop_ic(opt);
    if (generic->parsed()) return cmd_check_generic(opt);
    if (framed->parsed()) return cmd_framed(opt);
    if (local->parsed()) return cmd_local_dt(opt);
    if (strata->parsed()) return cmd_strata(opt);
    if (nullcone->parsed()) return cmd_nullcone(opt);
  } catch (const QuiverInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NonGenericStability& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const NonIntegralResult& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NonExactDivision& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
