#include "xdisc_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "xdisc_cli/parse.hpp"
#include "xdisc_cli/spec_io.hpp"

namespace xdisc::cli {

namespace {

struct Common {
  double tol_identity = kTolIdentity;
  double tol_distinct = kTolDistinct;
  double tol_equality = 1e-9;
  std::size_t omega_grid = 4096;
  std::size_t grid = 200;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  std::string format = "json";
};

void add_tolerances(CLI::App* app, Common& c) {
  app->add_option("--tol-identity", c.tol_identity, "Left-inverse residual threshold")->capture_default_str();
  app->add_option("--tol-distinct", c.tol_distinct, "Distinctness threshold")->capture_default_str();
  app->add_option("--tol-equality", c.tol_equality, "Equality-manifold tolerance")->capture_default_str();
}

CLI::Option* add_seed(CLI::App* app, Common& c) {
  return app->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
}

void echo_seed(const CLI::Option* opt, const Common& c, std::ostream& err) {
  if (opt->count() == 0) err << "seed: " << c.seed << " (default)\n";
}

ClassifyOptions classify_options(const Common& c) {
  ClassifyOptions o;
  o.identity = c.tol_identity;
  o.distinct = c.tol_distinct;
  o.equality = c.tol_equality;
  o.omega_grid = c.omega_grid;
  o.grid = c.grid;
  o.seed = c.seed;
  return o;
}

Classification classify_geodesic(const GeodesicSpec& g, const ClassifyOptions& opt) {
  if (const auto* s = std::get_if<G2GeodesicSpec>(&g)) return classify_g2(*s, opt);
  if (const auto* s = std::get_if<EGeodesicSpec>(&g)) return classify_e(*s, opt);
  fail(ErrorCode::InvalidSpec, "classification is available for G2 and tetrablock geodesics only");
}

json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) fail(ErrorCode::Parse, "cannot open '" + path + "'");
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, path + ": " + e.what());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

CVec parse_point(const std::string& text) {
  CVec out;
  for (const auto& t : split_args(text)) out.push_back(parse_complex(t));
  return out;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left inverses of complex geodesics: classification, verification and evaluation", "xdisc"};
  app.require_subcommand(1);
  Common c;

  // classify
  auto* classify = app.add_subcommand("classify", "Decide uniqueness of the left inverse of a geodesic");
  classify->require_subcommand(1);
  std::string form, alpha = "0", tau = "1", beta = "0.5", abcd, zt = "strict", omega1 = "1", omega2 = "1", cc = "0",
                    psihat = "0", geo_token, json_path, k_token = "2", b_token = "1";
  for (auto* sub : {classify}) {
    add_tolerances(sub, c);
    sub->add_option("--omega-grid", c.omega_grid, "Circle grid for the admissible-omega scan")->capture_default_str();
    sub->add_option("--grid", c.grid, "Lambda grid for witness residuals")->capture_default_str();
  }
  auto* cg2 = classify->add_subcommand("g2", "Geodesic of the symmetrized bidisc");
  cg2->add_option("--form", form, "blaschke | auto")->required()->check(CLI::IsMember({"blaschke", "auto"}));
  cg2->add_option("--alpha", alpha, "Blaschke zero or automorphism point");
  cg2->add_option("--tau", tau, "Automorphism rotation");
  auto* ce = classify->add_subcommand("e", "Geodesic of the tetrablock");
  ce->add_option("--form", form, "form0 | formva")->required()->check(CLI::IsMember({"form0", "formva"}));
  ce->add_option("--beta", beta, "FormVA beta in (0,1)");
  ce->add_option("--abcd", abcd, "FormVA a,b,c,d");
  ce->add_option("--z", zt, "FormVA Z: identity | zero | strict | self-map W with Z = l*W");
  ce->add_option("--omega1", omega1, "Form0 omega1");
  ce->add_option("--omega2", omega2, "Form0 omega2");
  ce->add_option("--C", cc, "Form0 constant C in [0,1]");
  ce->add_option("--psihat", psihat, "Form0 self-map psi-hat with psi-hat(0) = 0");
  auto* cr = classify->add_subcommand("reinhardt", "Model domain |z| + b|w|^k < 1");
  cr->add_option("--k", k_token, "Type k, or inf")->capture_default_str();
  cr->add_option("--b", b_token, "Coefficient b > 0")->capture_default_str();
  auto* cs = classify->add_subcommand("spec", "Geodesic given as a token or a JSON document");
  auto* geo_opt = cs->add_option("--geodesic", geo_token, "Geodesic token");
  cs->add_option("--json", json_path, "JSON geodesic spec file ('-' for stdin)")->excludes(geo_opt);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a sampling-based check");
  verify->require_subcommand(1);
  std::string f_token, f2_token, g_token, domain = "g2", l1 = "0.1", l2 = "0.4";
  auto* vl = verify->add_subcommand("leftinv", "max |F(f(l)) - l| over a lambda grid");
  vl->add_option("--F", f_token, "Map token")->required();
  vl->add_option("--f", g_token, "Geodesic token")->required();
  vl->add_option("--grid", c.grid, "Grid size")->capture_default_str();
  vl->add_option("--tol-identity", c.tol_identity, "Residual threshold")->capture_default_str();
  auto* vd = verify->add_subcommand("into-disc", "sup |F| over domain samples");
  vd->add_option("--F", f_token, "Map token")->required();
  vd->add_option("--domain", domain, "Domain name")->capture_default_str();
  vd->add_option("--samples", c.samples, "Sample count")->capture_default_str();
  auto* vd_seed = add_seed(vd, c);
  auto* vx = verify->add_subcommand("distinct", "sup |F1 - F2| over domain samples");
  vx->add_option("--F1", f_token, "First map token")->required();
  vx->add_option("--F2", f2_token, "Second map token")->required();
  vx->add_option("--domain", domain, "Domain name")->capture_default_str();
  vx->add_option("--samples", c.samples, "Sample count")->capture_default_str();
  vx->add_option("--tol-distinct", c.tol_distinct, "Distinctness threshold")->capture_default_str();
  auto* vx_seed = add_seed(vx, c);
  auto* ve = verify->add_subcommand("equality", "Caratheodory lower bound against the geodesic upper bound");
  ve->add_option("--F", f_token, "Map token")->required();
  ve->add_option("--f", g_token, "Geodesic token")->required();
  ve->add_option("--l1", l1, "First disc point")->capture_default_str();
  ve->add_option("--l2", l2, "Second disc point")->capture_default_str();
  ve->add_option("--tol-identity", c.tol_identity, "Equality threshold")->capture_default_str();
  auto* vc = verify->add_subcommand("classification", "Re-verify every witness of a classification JSON");
  vc->add_option("--json", json_path, "Classification file ('-' for stdin)")->required();
  vc->add_option("--grid", c.grid, "Grid size")->capture_default_str();
  vc->add_option("--tol-identity", c.tol_identity, "Residual threshold")->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a map or a geodesic at one point");
  eval->require_subcommand(1);
  std::string omega = "1", s_tok = "0", p_tok = "0", x1 = "0", x2 = "0", x3 = "0", at, lambda = "0";
  bool swapped = false;
  auto* ep = eval->add_subcommand("psi", "Psi_omega(s, p)");
  ep->add_option("--omega", omega, "omega, |omega| <= 1");
  ep->add_option("--s", s_tok, "s");
  ep->add_option("--p", p_tok, "p");
  CLI::App* ephi = nullptr;
  CLI::App* etil = nullptr;
  for (auto** sub : {&ephi, &etil}) {
    *sub = eval->add_subcommand(sub == &ephi ? "phi" : "phitilde", sub == &ephi ? "Phi_omega(x)" : "PhiTilde_omega(x)");
    (*sub)->add_option("--omega", omega, "Unimodular omega");
    (*sub)->add_option("--x1", x1, "x1");
    (*sub)->add_option("--x2", x2, "x2");
    (*sub)->add_option("--x3", x3, "x3");
    (*sub)->add_flag("--swapped", swapped, "Compose with the coordinate swap");
  }
  auto* em = eval->add_subcommand("map", "Any map token at a point");
  em->add_option("--F", f_token, "Map token")->required();
  em->add_option("--at", at, "Comma-separated coordinates")->required();
  auto* eg = eval->add_subcommand("geodesic", "Geodesic token at lambda");
  eg->add_option("--f", g_token, "Geodesic token")->required();
  eg->add_option("--lambda", lambda, "Disc point")->required();

  // sample
  auto* samp = app.add_subcommand("sample", "Deterministic domain samples as CSV");
  std::size_t n = 1000;
  samp->add_option("--domain", domain, "Domain name")->required();
  samp->add_option("--n", n, "Number of points")->capture_default_str();
  auto* samp_seed = add_seed(samp, c);

  // plot
  auto* plot = app.add_subcommand("plot", "Plot data as CSV");
  plot->require_subcommand(1);
  bool full = false;
  std::size_t rays = 8, steps = 50;
  auto* pa = plot->add_subcommand("admissible-omega", "Admissible omega arcs for an automorphism geodesic");
  pa->add_option("--tau", tau, "Automorphism rotation");
  pa->add_option("--alpha", alpha, "Automorphism point");
  pa->add_option("--omega-grid", c.omega_grid, "Circle grid")->capture_default_str();
  pa->add_flag("--full", full, "Emit every grid point instead of one row per arc");
  auto* pl = plot->add_subcommand("level-set", "F along rays of the lambda disc, through the geodesic");
  pl->add_option("--F", f_token, "Map token")->required();
  pl->add_option("--f", g_token, "Geodesic token")->required();
  pl->add_option("--rays", rays, "Number of rays")->capture_default_str();
  pl->add_option("--steps", steps, "Points per ray")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (classify->parsed()) {
      const ClassifyOptions opt = classify_options(c);
      Classification result;
      if (cg2->parsed()) {
        G2GeodesicSpec g = form == "blaschke" ? G2GeodesicSpec{BlaschkeForm{{parse_complex(alpha)}}}
                                              : G2GeodesicSpec{AutoForm{{parse_complex(tau), parse_complex(alpha)}}};
        result = classify_g2(g, opt);
      } else if (ce->parsed()) {
        std::string token;
        if (form == "form0") {
          token = "form0:omega1=" + omega1 + ",omega2=" + omega2 + ",C=" + cc + ",psihat=" + psihat;
          result = classify_e(std::get<EGeodesicSpec>(parse_geodesic(token)), opt);
        } else {
          FormVA f;
          f.beta = parse_real(beta);
          if (!abcd.empty()) {
            const auto parts = split_args(abcd);
            if (parts.size() != 4) fail(ErrorCode::Parse, "--abcd takes four comma-separated numbers");
            f.a = parse_complex(parts[0]);
            f.b = parse_complex(parts[1]);
            f.c = parse_complex(parts[2]);
            f.d = parse_complex(parts[3]);
          }
          f.z = parse_z(zt);
          result = classify_e(EGeodesicSpec{f}, opt);
        }
      } else if (cr->parsed()) {
        const std::optional<int> k = k_token == "inf" ? std::nullopt : std::optional<int>(parse_int(k_token));
        result = reinhardt_classify(k, parse_real(b_token), opt);
      } else {
        if (geo_token.empty() && json_path.empty()) fail(ErrorCode::Parse, "classify spec needs --geodesic or --json");
        const GeodesicSpec g = geo_token.empty() ? geodesic_from(read_json(json_path)) : parse_geodesic(geo_token);
        result = classify_geodesic(g, opt);
      }
      print(out, to_json(result));
      if (result.verdict == Verdict::InvalidSpec) {
        err << "invalid spec: " << result.reason << "\n";
        return kInvalid;
      }
      return kOk;
    }

    if (verify->parsed()) {
      if (vl->parsed()) {
        const auto rep = verify_left_inverse(parse_left_inverse(f_token), parse_geodesic(g_token), c.grid, c.tol_identity);
        print(out, to_json(rep));
        return rep.pass ? kOk : kCheckFailed;
      }
      if (vd->parsed()) {
        echo_seed(vd_seed, c, err);
        const auto tag = parse_domain(domain);
        if (!tag) fail(ErrorCode::Parse, "unknown domain '" + domain + "'");
        const auto rep = verify_into_disc(parse_left_inverse(f_token), *tag, c.samples, c.seed);
        print(out, to_json(rep));
        return rep.pass ? kOk : kCheckFailed;
      }
      if (vx->parsed()) {
        echo_seed(vx_seed, c, err);
        const auto tag = parse_domain(domain);
        if (!tag) fail(ErrorCode::Parse, "unknown domain '" + domain + "'");
        const auto rep = distinct_maps(parse_left_inverse(f_token), parse_left_inverse(f2_token), *tag, c.samples,
                                       c.seed, c.tol_distinct);
        print(out, to_json(rep));
        return rep.distinct ? kOk : kCheckFailed;
      }
      if (ve->parsed()) {
        const auto rep = equality_check(parse_geodesic(g_token), parse_left_inverse(f_token), parse_complex(l1),
                                        parse_complex(l2), c.tol_identity);
        print(out, to_json(rep));
        return rep.pass ? kOk : kCheckFailed;
      }
      const Classification cl = classification_from(read_json(json_path));
      if (!cl.geodesic) fail(ErrorCode::Parse, "classification carries no geodesic");
      json reports = json::array();
      bool pass = true;
      for (const auto& w : cl.witnesses) {
        const auto rep = verify_left_inverse(w, *cl.geodesic, c.grid, c.tol_identity);
        pass = pass && rep.pass;
        reports.push_back(to_json(rep));
      }
      print(out, {{"schema", kSchema}, {"check", "classification"}, {"pass", pass}, {"witnesses", reports}});
      return pass ? kOk : kCheckFailed;
    }

    if (eval->parsed()) {
      json j = {{"schema", kSchema}};
      if (ep->parsed()) {
        j["value"] = to_json(psi_omega(parse_complex(omega), {parse_complex(s_tok), parse_complex(p_tok)}));
      } else if (ephi->parsed() || etil->parsed()) {
        const PointE pt{parse_complex(x1), parse_complex(x2), parse_complex(x3)};
        const Complex w = parse_complex(omega);
        j["value"] = to_json(ephi->parsed() ? phi_omega(w, pt, swapped) : phi_tilde(w, pt, swapped));
      } else if (em->parsed()) {
        j["value"] = to_json(eval_left_inverse(parse_left_inverse(f_token), parse_point(at)));
      } else {
        j["point"] = to_json(eval_geodesic(parse_geodesic(g_token), parse_complex(lambda)));
      }
      print(out, j);
      return kOk;
    }

    if (samp->parsed()) {
      echo_seed(samp_seed, c, err);
      const auto tag = parse_domain(domain);
      if (!tag) fail(ErrorCode::Parse, "unknown domain '" + domain + "'");
      const int dim = tag->dimension();
      for (int i = 1; i <= dim; ++i) out << (i > 1 ? "," : "") << "z" << i << "_re,z" << i << "_im";
      out << "\n";
      for (const auto& pt : sample(*tag, n, c.seed)) {
        for (std::size_t i = 0; i < pt.size(); ++i) {
          out << (i ? "," : "") << fmt(pt[i].real()) << "," << fmt(pt[i].imag());
        }
        out << "\n";
      }
      return kOk;
    }

    if (pa->parsed()) {
      const Complex t = parse_complex(tau), a = parse_complex(alpha);
      validate(MoebiusSpec{t, a});
      if (full) {
        out << "theta,omega_re,omega_im,q_re,q_im,admissible\n";
        for (std::size_t i = 0; i < c.omega_grid; ++i) {
          const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(c.omega_grid);
          const Complex w = cis(th);
          const Complex q = (1.0 + t * a * std::conj(w)) * (1.0 + t * a * std::conj(w)) / t;
          out << fmt(th) << "," << fmt(w.real()) << "," << fmt(w.imag()) << "," << fmt(q.real()) << ","
              << fmt(q.imag()) << "," << (psi_admissible(t, a, w) ? 1 : 0) << "\n";
        }
        return kOk;
      }
      out << "arc,theta_lo,theta_hi,theta,omega_re,omega_im,tangent\n";
      const auto arcs = admissible_omega_set(t, a, c.omega_grid);
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto& r = arcs[i];
        out << i << "," << fmt(r.lo) << "," << fmt(r.hi) << "," << fmt(r.theta) << "," << fmt(r.omega.real()) << ","
            << fmt(r.omega.imag()) << "," << (r.tangent ? 1 : 0) << "\n";
      }
      return kOk;
    }

    // level-set
    const auto F = parse_left_inverse(f_token);
    const auto g = parse_geodesic(g_token);
    out << "ray,radius,lambda_re,lambda_im,value_re,value_im,abs_value,residual\n";
    for (std::size_t r = 0; r < rays; ++r) {
      const Complex dir = cis(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(rays));
      for (std::size_t s = 0; s < steps; ++s) {
        const double rad = 0.99 * static_cast<double>(s) / static_cast<double>(std::max<std::size_t>(1, steps - 1));
        const Complex l = rad * dir;
        const Complex v = eval_left_inverse(F, eval_geodesic(g, l));
        out << r << "," << fmt(rad) << "," << fmt(l.real()) << "," << fmt(l.imag()) << "," << fmt(v.real()) << ","
            << fmt(v.imag()) << "," << fmt(std::abs(v)) << "," << fmt(std::abs(v - l)) << "\n";
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidSpec:
      case ErrorCode::Parse:
      case ErrorCode::DomainError:
      case ErrorCode::EndpointMismatch:
        return kInvalid;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace xdisc::cli
