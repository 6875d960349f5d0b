/// @file hopfpi_main.cpp
/// @brief Command-line front end: verify instance files, compute invariants,
///        attempt the canonical trace, and render full reports.
///
/// Exit codes: 0 every requested check passed; 1 a mathematical failure or a
/// refused construction; 2 malformed input (file, schema, scalar syntax, or
/// command line).  All numeric output uses the exact scalar syntax — no
/// floating point anywhere.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpi/checkutil.hpp"
#include "hopfpi/integrals.hpp"
#include "hopfpi/io.hpp"
#include "hopfpi/pipeline.hpp"
#include "hopfpi/traces.hpp"

namespace {

using namespace hopfpi;

/// HOPFPI_THREADS caps internal parallelism.  Checks are evaluated
/// sequentially (reports are canonical regardless), so the value is parsed
/// and validated but never changes results.
int thread_cap() {
  const char* env = std::getenv("HOPFPI_THREADS");
  if (env == nullptr) return 1;
  try {
    const int v = std::stoi(env);
    return v > 0 ? v : 1;
  } catch (const std::exception&) {
    return 1;
  }
}

std::string graded_covector_str(const HopfPi& h, const GradedCovector& lam) {
  std::ostringstream out;
  for (int a = 0; a < h.n(); ++a) {
    out << "    [" << a << "] " << vector_str(lam[a]) << "\n";
  }
  return out.str();
}

std::string graded_vector_str(const HopfPi& h, const GradedVector& v) {
  std::ostringstream out;
  for (int a = 0; a < h.n(); ++a) {
    out << "    [" << a << "] " << vector_str(v[a]) << "\n";
  }
  return out.str();
}

/// h_a = (id (x) nu)(R_{a,1}).
GradedVector nu_contraction(const HopfPi& h, const RMatrixFamily& r, const Vector& nu) {
  const int e = h.group().id;
  GradedVector out = zero_graded_vector(h);
  for (int a = 0; a < h.n(); ++a) {
    const Vector& ra = r.r(a, e);
    Vector v(h.field(), h.d(a));
    for (int i = 0; i < h.d(a); ++i) {
      for (int j = 0; j < h.d(e); ++j) v[i] += ra[i * h.d(e) + j] * nu[j];
    }
    out[a] = v;
  }
  return out;
}

int run_verify(const std::string& path) {
  const Instance inst = load_instance(path);
  Report rep = verify_instance(inst);
  std::cout << "instance: " << inst.name << "\n" << rep.render();
  return rep.pass() ? 0 : 1;
}

int run_invariants(const std::string& path, const std::string& side_opt,
                   const std::string& what_opt) {
  const Instance inst = load_instance(path);
  Report ver = verify_instance(inst);
  if (!ver.pass()) {
    std::cout << "instance: " << inst.name << "\nverification failed; invariants not computed\n"
              << ver.render();
    return 1;
  }
  const HopfPi& h = inst.h;
  const bool has_r = inst.crossing && inst.rmatrix;

  std::vector<std::string> wanted;
  if (what_opt.empty()) {
    wanted = {"integrals", "grouplike", "nu"};
    if (inst.crossing) wanted.push_back("phihat");
    if (has_r) {
      wanted.push_back("drinfeld");
      wanted.push_back("ell");
      wanted.push_back("h");
    }
    if (has_r && inst.twist) wanted.push_back("G");
  } else {
    std::stringstream ss(what_opt);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) wanted.push_back(item);
    }
  }
  const std::set<std::string> known = {"integrals", "grouplike", "nu",  "phihat",
                                       "drinfeld",  "ell",       "G",   "h"};
  for (const auto& w : wanted) {
    if (!known.count(w)) {
      std::cerr << "unknown invariant '" << w << "'\n";
      return 2;
    }
  }

  std::cout << "instance: " << inst.name << "\n";
  Report rep;
  bool refused = false;
  for (const auto& w : wanted) {
    if (w == "integrals") {
      std::vector<Side> sides;
      if (side_opt.empty() || side_opt == "left") sides.push_back(Side::Left);
      if (side_opt.empty() || side_opt == "right") sides.push_back(Side::Right);
      for (Side s : sides) {
        const char* label = (s == Side::Left) ? "left" : "right";
        auto space = integral_space(h, s);
        std::cout << w << " (" << label << "): space dimension " << space.size() << "\n";
        for (const auto& basis : space) std::cout << graded_covector_str(h, basis);
        if (space.size() == 1) {
          rep.merge(is_integral(h, space.front(), s));
        } else {
          rep.add_fail("integral.dimension", {}, "integral space is not one-dimensional",
                       Severity::TheoremViolation);
        }
      }
    } else if (w == "grouplike") {
      DistinguishedG dg = distinguished_g(h);
      rep.merge(dg.rep);
      if (dg.rep.pass()) std::cout << "grouplike g:\n" << graded_vector_str(h, dg.g);
    } else if (w == "nu") {
      DistinguishedNu dn = distinguished_nu(h);
      rep.merge(dn.rep);
      if (dn.rep.pass()) {
        std::cout << "nu: " << vector_str(dn.nu) << "\nnu-inverse: " << vector_str(dn.nu_inv)
                  << "\n";
      }
    } else if (w == "phihat") {
      if (!inst.crossing) {
        std::cout << "phihat: requires a crossing decoration\n";
        refused = true;
        continue;
      }
      PhiHat ph = phi_hat(h, *inst.crossing);
      rep.merge(ph.rep);
      std::cout << "phihat:";
      for (const Scalar& s : ph.value) std::cout << " " << s.str();
      std::cout << "\n";
    } else if (w == "drinfeld" || w == "ell" || w == "G" || w == "h") {
      if (!has_r) {
        std::cout << w << ": requires crossing and rmatrix decorations\n";
        refused = true;
        continue;
      }
      if (w == "drinfeld") {
        Drinfeld du = drinfeld_u(h, *inst.crossing, *inst.rmatrix);
        rep.merge(du.rep);
        std::cout << "drinfeld u:\n" << graded_vector_str(h, du.u)
                  << "drinfeld u-inverse:\n" << graded_vector_str(h, du.u_inv);
      } else if (w == "ell") {
        EllElement el = ell_element(h, *inst.crossing, *inst.rmatrix);
        rep.merge(el.rep);
        std::cout << "ell:\n" << graded_vector_str(h, el.ell);
      } else if (w == "G") {
        if (!inst.twist) {
          std::cout << "G: requires a twist decoration\n";
          refused = true;
          continue;
        }
        GElement ge = G_element(h, *inst.crossing, *inst.rmatrix, *inst.twist);
        rep.merge(ge.rep);
        std::cout << "G:\n" << graded_vector_str(h, ge.g);
      } else {
        DistinguishedNu dn = distinguished_nu(h);
        rep.merge(dn.rep);
        if (dn.rep.pass()) {
          std::cout << "h:\n" << graded_vector_str(h, nu_contraction(h, *inst.rmatrix, dn.nu));
        }
      }
    }
  }
  if (!rep.pass()) std::cout << rep.render();
  return (rep.pass() && !refused) ? 0 : 1;
}

int run_trace(const std::string& path) {
  const Instance inst = load_instance(path);
  Report ver = verify_instance(inst);
  if (!ver.pass()) {
    std::cout << "instance: " << inst.name << "\nverification failed; trace not attempted\n"
              << ver.render();
    return 1;
  }
  std::cout << "instance: " << inst.name << "\n";
  if (!inst.crossing || !inst.rmatrix || !inst.twist) {
    std::cout << "canonical trace requires crossing, rmatrix, and twist decorations\n";
    return 1;
  }
  TraceResult res = canonical_trace(inst.h, *inst.crossing, *inst.rmatrix, *inst.twist);
  std::cout << res.rep.render();
  if (!res.tr) {
    std::cout << "canonical trace refused; failed preconditions listed above\n";
    return 1;
  }
  std::cout << "canonical trace:\n" << graded_covector_str(inst.h, res.tr->tr);
  return res.rep.pass() ? 0 : 1;
}

int run_report(const std::string& path, const std::string& out_path) {
  const Instance inst = load_instance(path);
  std::ostringstream doc;
  doc << "instance: " << inst.name << "\n";
  doc << "field: "
      << (inst.h.field().is_rational() ? std::string("rational")
                                       : "gf(" + std::to_string(inst.h.field().characteristic) + ")")
      << "\n";
  doc << "group order: " << inst.h.n() << "\ndims:";
  for (int d : inst.h.co.dims) doc << " " << d;
  doc << "\ndecorations:";
  if (inst.crossing) doc << " crossing";
  if (inst.rmatrix) doc << " rmatrix";
  if (inst.twist) doc << " twist";
  doc << "\n\n== verification ==\n";
  Report ver = verify_instance(inst);
  doc << ver.render();
  if (ver.pass()) {
    doc << "\n== identity suite ==\n" << identity_suite(inst).render();
    if (inst.crossing && inst.rmatrix && inst.twist) {
      doc << "\n== canonical trace ==\n";
      TraceResult res = canonical_trace(inst.h, *inst.crossing, *inst.rmatrix, *inst.twist);
      doc << res.rep.render();
      if (res.tr) doc << "canonical trace:\n" << graded_covector_str(inst.h, res.tr->tr);
    }
  }
  if (out_path.empty()) {
    std::cout << doc.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    out << doc.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfpi: exact verification and invariants of Hopf group-coalgebras"};
  app.require_subcommand(1);
  (void)thread_cap();

  std::string path;
  std::string side;
  std::string what;
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "run every applicable axiom verifier");
  verify->add_option("file", path, "instance file")->required();

  auto* invariants = app.add_subcommand("invariants", "compute canonical invariants");
  invariants->add_option("file", path, "instance file")->required();
  invariants->add_option("--side", side, "integral side: left or right")
      ->check(CLI::IsMember({"left", "right"}));
  invariants->add_option("--what", what,
                         "comma-separated list: integrals,grouplike,nu,phihat,drinfeld,ell,G,h");

  auto* trace = app.add_subcommand("trace", "attempt the canonical trace");
  trace->add_option("file", path, "instance file")->required();

  auto* report = app.add_subcommand("report", "full verification + invariants document");
  report->add_option("file", path, "instance file")->required();
  report->add_option("--out", out_path, "write the document to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(path);
    if (invariants->parsed()) return run_invariants(path, side, what);
    if (trace->parsed()) return run_trace(path);
    return run_report(path, out_path);
  } catch (const hopfpi::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
