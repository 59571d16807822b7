// Command-line front end: numerical ranges, fractional powers, factorization,
// ideal lifts, and the regression gallery, over algebras described in JSON.
//
// Exit codes: 0 success, 2 a mathematical claim or precondition failed,
// 3 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "banachlab/gallery.hpp"
#include "banachlab/ideals.hpp"
#include "banachlab/io.hpp"
#include "banachlab/mideals.hpp"
#include "banachlab/numrange.hpp"
#include "banachlab/roots.hpp"
#include "banachlab/svg.hpp"

namespace {

using namespace banachlab;

std::string show(const cplx& z) {
  std::string s = format_double(z.real());
  if (z.imag() != 0.0) {
    s += (z.imag() < 0 ? " - " : " + ");
    s += format_double(std::abs(z.imag()));
    s += "i";
  }
  return s;
}

std::string show(const cvec& v) {
  std::string s = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += show(v[i]);
  }
  return s + "]";
}

Element load_element(const AlgebraPtr& alg, const std::string& coeffs) {
  return alg->element(parse_coeffs(coeffs, alg->dim()));
}

int cmd_gallery(const std::string& filter, const std::string& json_path) {
  gallery::GalleryReport rep = gallery::run_gallery(filter);
  for (const auto& cs : rep.cases) {
    std::cout << "== " << cs.id << ": " << cs.title << "\n";
    for (const auto& c : cs.claims)
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << "  "
                << c.description << "\n         value "
                << format_double(c.value) << ", threshold "
                << format_double(c.threshold) << ", margin "
                << format_double(c.margin) << "\n         " << c.detail
                << "\n";
    for (const auto& n : cs.notes) std::cout << "  note: " << n << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw IoError("cannot write " + json_path);
    out << gallery::report_json(rep);
  }
  std::cout << (rep.all_pass ? "all claims pass" : "CLAIM FAILURES PRESENT")
            << "\n";
  return rep.all_pass ? 0 : 2;
}

int cmd_numrange(const std::string& alg_path, const std::string& coeffs,
                 const std::string& svg_path, const std::string& outer_csv,
                 const std::string& inner_csv, bool no_inner) {
  AlgebraPtr alg = load_algebra(alg_path);
  Element x = load_element(alg, coeffs);
  NumericalRangeEstimate est = numrange_outer(x);
  if (!no_inner && has_state_family(x.algebra()))
    numrange_inner(est, x);
  std::cout << "algebra: " << alg->label() << " (dim " << alg->dim() << ")\n"
            << "min Re W(x) (outer body): " << format_double(est.outer.min_re())
            << "\n"
            << "width: min " << format_double(est.outer.min_width()) << ", max "
            << format_double(est.outer.max_width()) << "\n";
  if (est.has_inner)
    std::cout << "inner states: " << est.inner.size()
              << ", outer-inner support gap <= "
              << format_double(est.hausdorff_gap) << "\n";
  if (!svg_path.empty()) emit_plot(est, svg_path, "W(x), " + alg->label());
  if (!outer_csv.empty()) write_outer_csv(est.outer, outer_csv);
  if (!inner_csv.empty()) write_inner_csv(est.inner, inner_csv);
  return 0;
}

int cmd_root(const std::string& alg_path, const std::string& coeffs,
             double alpha, const std::string& method) {
  AlgebraPtr alg = load_algebra(alg_path);
  Element x = load_element(alg, coeffs);
  PowerResult r = method == "series" ? power_series(x, alpha)
                  : method == "quad" ? power_balakrishnan(x, alpha)
                                      : power_auto(x, alpha);
  std::cout << "x^" << format_double(alpha) << " = " << show(r.value.coeffs())
            << "\nmethod: " << r.method
            << ", error estimate: " << format_double(r.est_error)
            << ", work: " << r.work << "\n";
  return 0;
}

int cmd_support(const std::string& alg_path, const std::string& coeffs) {
  AlgebraPtr alg = load_algebra(alg_path);
  Element x = load_element(alg, coeffs);
  SupportIdempotent s = support_idempotent(x);
  std::cout << "s(x) = " << show(s.s.coeffs()) << "\n"
            << "route gap (algebraic vs iterated square roots): "
            << format_double(s.route_gap) << "\n"
            << "defects: idempotency " << format_double(s.defect_idem)
            << ", left " << format_double(s.defect_left) << ", right "
            << format_double(s.defect_right) << "\n"
            << "norm(1 - s): " << format_double(s.norm_one_minus) << "\n";
  WsReport w = ws_equivalences_report(x);
  std::cout << "equivalences: support " << (w.support_ok ? "ok" : "NO")
            << ", pseudo-inverse " << (w.pseudo_ok ? "ok" : "NO")
            << ", invertible in ba(x) " << (w.invertible_in_ba ? "ok" : "NO")
            << ", spectral gap " << format_double(w.spectral_gap) << "\n";
  return w.all_ok ? 0 : 2;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t sep = s.find(';', start);
    if (sep == std::string::npos) sep = s.size();
    std::string piece = s.substr(start, sep - start);
    if (!piece.empty()) out.push_back(piece);
    start = sep + 1;
  }
  return out;
}

int cmd_factorize(const std::string& alg_path, const std::string& targets,
                  const std::string& pool, double eps, bool two_sided) {
  AlgebraPtr alg = load_algebra(alg_path);
  std::vector<Element> xs, cs;
  for (const auto& t : split_list(targets)) xs.push_back(load_element(alg, t));
  for (const auto& p : split_list(pool)) cs.push_back(load_element(alg, p));
  CohenResult r = two_sided ? hsa_factorize(xs, cs, eps)
                            : cohen_factorize(xs, cs, eps);
  std::cout << "z = " << show(r.z.coeffs()) << "\n";
  for (size_t i = 0; i < r.factors.size(); ++i)
    std::cout << "w_" << i << " = " << show(r.factors[i].coeffs())
              << "  (residual " << format_double(r.trace.residuals[i])
              << ", distance to target "
              << format_double(r.trace.factor_dist[i]) << ")\n";
  std::cout << "steps: " << r.trace.steps.size() << "\n";
  return 0;
}

int cmd_lift(const std::string& alg_path, const std::string& x_coeffs,
             const std::string& z_coeffs, const std::string& alpha_str) {
  AlgebraPtr alg = load_algebra(alg_path);
  Element x = load_element(alg, x_coeffs);
  Element z = load_element(alg, z_coeffs);
  MIdealIdeal J = mideal_from_central_idempotent(z);
  Element v = alg->zero();
  if (!alpha_str.empty()) {
    double re = 0, im = 0;
    if (std::sscanf(alpha_str.c_str(), "%lf,%lf", &re, &im) < 1)
      throw IoError("--alpha expects re or re,im");
    v = cssw_lift(x, J, cplx(re, im));
  } else {
    v = real_positive_lift(x, J);
  }
  std::cout << "v = " << show(v.coeffs()) << "\n"
            << "norm(v) = " << format_double(norm(v))
            << ", quotient norm of x = " << format_double(J.qnorm(x)) << "\n"
            << "coset check norm(P(v - x)... v - x in J): "
            << format_double(J.qnorm(v - x)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"real-positivity calculus in finite-dimensional Banach algebras"};
  app.require_subcommand(1);

  std::string filter, json_path;
  auto* g = app.add_subcommand("gallery", "run the regression gallery");
  g->add_option("--filter", filter, "only cases whose id contains this");
  g->add_option("--json", json_path, "write the machine-readable report here");

  std::string alg_path, coeffs, svg_path, outer_csv, inner_csv;
  bool no_inner = false;
  auto* nr = app.add_subcommand("numrange", "numerical range of an element");
  nr->add_option("algebra", alg_path, "algebra description (JSON)")->required();
  nr->add_option("coeffs", coeffs, "element coefficients (JSON array)")
      ->required();
  nr->add_option("--svg", svg_path, "write a plot here");
  nr->add_option("--outer-csv", outer_csv, "write the support function here");
  nr->add_option("--inner-csv", inner_csv, "write sampled state values here");
  nr->add_flag("--no-inner", no_inner, "skip the state sampling");

  std::string r_alg, r_coeffs, method = "auto";
  double alpha = 0.5;
  auto* rt = app.add_subcommand("root", "principal fractional power");
  rt->add_option("algebra", r_alg)->required();
  rt->add_option("coeffs", r_coeffs)->required();
  rt->add_option("--alpha", alpha, "exponent in (0,1)")->required();
  rt->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "series", "quad"}));

  std::string s_alg, s_coeffs;
  auto* sp = app.add_subcommand("support", "support idempotent and related "
                                           "equivalences");
  sp->add_option("algebra", s_alg)->required();
  sp->add_option("coeffs", s_coeffs)->required();

  std::string f_alg;
  std::string f_targets, f_pool;
  double eps = 0.25;
  bool two_sided = false;
  auto* fc = app.add_subcommand("factorize", "factor targets through a pool "
                                             "of approximate identities");
  fc->add_option("algebra", f_alg)->required();
  fc->add_option("--target", f_targets,
                 "target elements, coefficient arrays separated by ';'")
      ->required();
  fc->add_option("--pool", f_pool,
                 "pool elements, coefficient arrays separated by ';'")
      ->required();
  fc->add_option("--eps", eps, "closeness parameter");
  fc->add_flag("--two-sided", two_sided, "two-sided factorization");

  std::string l_alg, l_x, l_z, l_alpha;
  auto* lf = app.add_subcommand("lift", "norm-preserving lift through an "
                                        "M-ideal quotient");
  lf->add_option("algebra", l_alg)->required();
  lf->add_option("--x", l_x, "element to lift")->required();
  lf->add_option("--z", l_z, "central idempotent spanning the ideal")
      ->required();
  lf->add_option("--alpha", l_alpha, "interior point re[,im]; omit for the "
                                     "real-positive lift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (g->parsed()) return cmd_gallery(filter, json_path);
    if (nr->parsed())
      return cmd_numrange(alg_path, coeffs, svg_path, outer_csv, inner_csv,
                          no_inner);
    if (rt->parsed()) return cmd_root(r_alg, r_coeffs, alpha, method);
    if (sp->parsed()) return cmd_support(s_alg, s_coeffs);
    if (fc->parsed())
      return cmd_factorize(f_alg, f_targets, f_pool, eps, two_sided);
    if (lf->parsed()) return cmd_lift(l_alg, l_x, l_z, l_alpha);
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
