#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lensurg/diagram.hpp"
#include "lensurg/families.hpp"
#include "lensurg/invariants.hpp"
#include "lensurg/lens.hpp"

namespace lensurg::cli {

namespace {

std::string group_string(const std::vector<Integer>& orders) {
  if (orders.empty()) return "0";
  std::string s;
  for (const auto& o : orders) {
    if (!s.empty()) s += " + ";
    s += o == 0 ? std::string("Z") : "Z/" + o.str();
  }
  return s;
}

std::string coords_string(const std::vector<Integer>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ", " : "") + coords[i].str();
  return s + ")";
}

void print_violations(const std::vector<Violation>& violations, std::ostream& err) {
  for (const auto& v : violations)
    err << "  [" << v.code << "] " << v.detail << (v.severity == Severity::warning ? " (warning)" : "") << '\n';
}

void render_text(const InvariantReport& r, std::ostream& out) {
  auto optional_line = [&](const char* label, const char* field, const std::optional<Rational>& value) {
    out << label << " = ";
    if (value)
      out << to_string(*value) << '\n';
    else
      out << "undefined (" << r.absent.at(field) << ")\n";
  };
  out << "chi = " << r.chi << '\n';
  out << "sigma = " << r.sigma << '\n';
  out << "det M = " << r.det_m << '\n';
  out << "q = " << r.q_plus << '\n';
  optional_line("c^2", "c_squared", r.c_squared);
  optional_line("d3", "d3", r.d3);
  out << "H1 = " << group_string(r.h1) << '\n';
  out << "euler = " << coords_string(r.euler.smith.coords) << '\n';
  if (r.euler.residue)
    out << "euler residue = " << *r.euler.residue << " (generator: meridian of " << *r.euler.generator << ")\n";
}

// Loads and validates a diagram file; errors are reported and mapped to
// an exit status.
struct Loaded {
  SurgeryDiagram diagram;
  int status = ok;
};

Loaded load_checked(const std::string& path, std::ostream& err) {
  Loaded l;
  try {
    l.diagram = load_diagram(path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    l.status = invalid_input;
    return l;
  }
  const auto violations = validate(l.diagram);
  if (!is_valid(violations)) {
    err << "error: invalid diagram " << path << '\n';
    print_violations(violations, err);
    l.status = invalid_input;
  } else if (!violations.empty()) {
    print_violations(violations, err);
  }
  return l;
}

int cmd_invariants(const std::string& path, const std::string& format, std::ostream& out, std::ostream& err) {
  const Loaded l = load_checked(path, err);
  if (l.status != ok) return l.status;
  const InvariantReport r = report(l.diagram);
  if (format == "json")
    out << report_to_json(r).dump(2) << '\n';
  else
    render_text(r, out);
  if (const auto failure = r.failure()) {
    err << "error: " << *failure << '\n';
    return precondition;
  }
  return ok;
}

int cmd_knot(const std::string& path, std::ostream& out, std::ostream& err) {
  const Loaded l = load_checked(path, err);
  if (l.status != ok) return l.status;
  if (!l.diagram.knot) {
    err << "error: " << path << " has no \"knot\"\n";
    return missing_knot;
  }
  try {
    const Rational tb = tb_surgered(l.diagram);
    const Rational rot = rot_surgered(l.diagram);
    out << "tb = " << to_string(tb) << '\n';
    out << "rot = " << to_string(rot) << '\n';
  } catch (const NonTorsionError& e) {
    err << "error: " << e.what() << '\n';
    return precondition;
  }
  return ok;
}

int cmd_contfrac(const std::string& p, const std::string& q, std::ostream& out) {
  const auto cf = neg_contfrac(LensSpace(Integer(p), Integer(q)));
  out << p << "/" << q << " = [";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) out << (i ? ", " : "") << cf.terms[i];
  out << "]\n";
  return ok;
}

int cmd_family(const FamilyParams& fp, const std::string& emit, std::ostream& out) {
  const SurgeryDiagram d = exceptional_diagram(fp);
  const auto expect = exceptional_expectations(fp);
  if (!emit.empty()) save_diagram(d, emit);

  const InvariantReport r = report(d);
  const SurgeryDiagram closed = promote_knot(d);
  out << "L(" << expect.order << ", " << fp.s * fp.s << ") via n=" << fp.n << " s=" << fp.s << " k=" << fp.k
      << " l=" << fp.l << " pstab=" << fp.p_stab << " qstab=" << fp.q_stab << '\n';
  out << "chi = " << r.chi << '\n';
  out << "sigma = " << r.sigma << '\n';
  out << "det M = " << r.det_m << '\n';
  out << "det M0 = " << det(extended_matrix(d)) << '\n';
  out << "c^2 = " << to_string(*r.c_squared) << '\n';
  out << "d3 = " << to_string(*r.d3) << '\n';
  out << "tb = " << to_string(tb_surgered(d)) << '\n';
  out << "rot = " << to_string(rot_surgered(d)) << '\n';
  out << "euler residue = " << euler_residue(closed, "L") << " (generator: meridian of L)\n";
  out << "closed form: c^2 = " << to_string(expect.c_squared) << ", d3 = " << to_string(expect.d3)
      << ", tb = " << expect.tb << ", euler = " << expect.euler << '\n';
  return ok;
}

void render_census(const TightStructureCensus& c, std::ostream& out) {
  out << "L(" << c.lens.p() << ", " << c.lens.q() << "): tight count " << c.expected_count << '\n';
  out << std::left << std::setw(13) << "source" << std::setw(32) << "parameters" << std::setw(10) << "d3"
      << "euler\n";
  for (const auto& e : c.standard) {
    out << std::setw(13) << "standard" << std::setw(32) << ("rot=" + std::to_string(e.rot)) << std::setw(10)
        << to_string(e.d3) << e.residue << '\n';
  }
  for (const auto& e : c.exceptional) {
    const auto& fp = e.params;
    std::ostringstream params;
    params << "k=" << fp.k << " l=" << fp.l << " pstab=" << fp.p_stab << " qstab=" << fp.q_stab;
    out << std::setw(13) << "exceptional" << std::setw(32) << params.str() << std::setw(10) << to_string(e.d3)
        << e.residue << '\n';
  }
  out << std::right;
  for (const auto& check : c.checks) {
    out << "check " << check.name << ": " << (check.passed ? "pass" : "FAIL");
    if (!check.detail.empty()) out << " (" << check.detail << ")";
    out << '\n';
  }
}

int cmd_census(long long n, long long s, const std::vector<long long>& grid, std::ostream& out) {
  if (grid.empty()) {
    const auto c = census(n, s);
    render_census(c, out);
    return c.ok() ? ok : census_failed;
  }
  bool all = true;
  for (long long gn = 2; gn <= grid[0]; ++gn) {
    for (long long gs = 1; gs <= grid[1]; ++gs) {
      const auto c = census(gn, gs);
      all = all && c.ok();
      out << "n=" << gn << " s=" << gs << " L(" << c.lens.p() << ", " << c.lens.q() << ") "
          << c.standard.size() << "+" << c.exceptional.size() << "/" << c.expected_count << " "
          << (c.ok() ? "pass" : "FAIL");
      for (const auto& check : c.checks)
        if (!check.passed) out << " [" << check.name << ": " << check.detail << "]";
      out << '\n';
    }
  }
  return all ? ok : census_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of contact surgery diagrams and tight structures on lens spaces"};
  app.require_subcommand(1);

  std::string path, format = "text";
  auto* inv = app.add_subcommand("invariants", "chi, sigma, det M, c^2, d3, H1 and Euler class of a diagram");
  inv->add_option("file", path, "diagram file (JSON)")->required();
  inv->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* knot = app.add_subcommand("knot", "tb and rot of the distinguished knot after surgery");
  knot->add_option("file", path, "diagram file (JSON)")->required();

  std::string p, q;
  auto* contfrac = app.add_subcommand("contfrac", "negative continued fraction of p/q");
  contfrac->add_option("p", p)->required();
  contfrac->add_option("q", q)->required();
  auto* tight = app.add_subcommand("tight-count", "number of tight contact structures on L(p, q)");
  tight->add_option("p", p)->required();
  tight->add_option("q", q)->required();

  FamilyParams fp;
  std::string emit;
  auto* family = app.add_subcommand("family", "invariants of an exceptional family diagram");
  family->add_option("--n", fp.n)->required();
  family->add_option("--s", fp.s)->required();
  family->add_option("--k", fp.k)->required();
  family->add_option("--l", fp.l)->required();
  family->add_option("--pstab", fp.p_stab)->required();
  family->add_option("--qstab", fp.q_stab)->required();
  family->add_option("--emit", emit, "write the diagram to this file");

  long long n = 0, s = 0;
  std::vector<long long> grid;
  auto* cens = app.add_subcommand("census", "tight structures on L(ns^2 - s + 1, s^2) and their Euler classes");
  auto* n_opt = cens->add_option("--n", n);
  auto* s_opt = cens->add_option("--s", s);
  cens->add_option("--grid", grid, "NMAX SMAX: run every 2 <= n <= NMAX, 1 <= s <= SMAX")->expected(2);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? ok : usage;
  }

  try {
    if (*inv) return cmd_invariants(path, format, out, err);
    if (*knot) return cmd_knot(path, out, err);
    if (*contfrac) return cmd_contfrac(p, q, out);
    if (*tight) {
      out << tight_count(LensSpace(Integer(p), Integer(q))) << '\n';
      return ok;
    }
    if (*family) return cmd_family(fp, emit, out);
    if (*cens) {
      if (grid.empty() && (n_opt->count() == 0 || s_opt->count() == 0)) {
        err << "error: census needs --n and --s, or --grid NMAX SMAX\n";
        return usage;
      }
      return cmd_census(n, s, grid, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    print_violations(e.violations, err);
    return invalid_input;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::runtime_error& e) {
    // integer parse failures from boost, unwritable --emit targets
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }
  return usage;
}

}  // namespace lensurg::cli
