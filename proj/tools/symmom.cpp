// Command-line front end: every computation of the toolkit as a subcommand
// with machine-readable (CSV/JSON) output.
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmom/ensemble.hpp"
#include "symmom/errors.hpp"
#include "symmom/euler_products.hpp"
#include "symmom/extremal.hpp"
#include "symmom/fixtures.hpp"
#include "symmom/io.hpp"
#include "symmom/riordan.hpp"

namespace {

using namespace symmom;

struct Options {
  std::string subcommand;
  std::int64_t level = 1;
  int m = 2;
  std::string z_text = "0";
  std::string kind = "half";
  std::int64_t prime_cutoff = 10000;
  int nu_max = 96;
  int nodes = 256;
  double x = 100.0;
  std::string source = "fixture";
  std::string fixture_dir = "data/fixtures";
  std::string db_base;
  std::string format = "csv";
  std::string output;
  std::string tail = "bounded";
  // subcommand-specific
  std::int64_t p = 2;
  double s = 1.0;
  double rho = 0.5;
  std::string twist = "standard";
  bool product = false;
  int table_k = -1;
  int numbers_k = -1;
  std::string sign_text = "+";
  std::string r_grid_text = "32,64,128,256,512";
  std::int64_t hecke_m = 1;
  std::int64_t hecke_n = 1;
  int form_index = -1;
  double class_c = 1.0;
  double xi = 0.0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw domain_error("cannot open output file " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

TruncationPolicy make_policy(const Options& opt) {
  TruncationPolicy policy;
  policy.prime_cutoff = opt.prime_cutoff;
  policy.series_depth = opt.nu_max;
  policy.quadrature_nodes = opt.nodes;
  policy.tail_mode = opt.tail == "ignored" ? TailMode::ignored : TailMode::bounded;
  policy.validate();
  return policy;
}

std::vector<Newform> load_forms(const Options& opt) {
  const Source src = opt.source == "remote" ? Source::remote : Source::fixture;
  const std::string loc = src == Source::remote ? opt.db_base : opt.fixture_dir;
  return fetch_newforms(opt.level, src, loc);
}

int run(const Options& opt) {
  const std::complex<double> z = parse_complex(opt.z_text);

  if (opt.subcommand == "harmonics") {
    HarmonicsF h = opt.product ? product_harmonics(opt.m, z, opt.nu_max) : harmonics(opt.m, z, opt.nu_max);
    emit(opt, opt.format == "json" ? harmonics_to_json(h) : harmonics_to_csv(h));
    return 0;
  }

  if (opt.subcommand == "local-factor") {
    TruncationPolicy policy = make_policy(opt);
    const TwistKind twist = opt.twist == "sym2" ? TwistKind::sym_square : TwistKind::standard;
    const std::complex<double> v = local_moment_factor(opt.p, opt.m, z, opt.s, opt.rho, policy, twist);
    std::ostringstream ss;
    ss << "p,m,z_re,z_im,s,rho,twist,value_re,value_im\n"
       << opt.p << ',' << opt.m << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
       << format_double(opt.s) << ',' << format_double(opt.rho) << ',' << opt.twist << ','
       << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "moment") {
    TruncationPolicy policy = make_policy(opt);
    const MomentKind kind = opt.kind == "one" ? MomentKind::one : MomentKind::half;
    MomentConstant mc = moment_constant(opt.level, opt.m, z, kind, policy);
    emit(opt, opt.format == "json" ? moment_to_json(opt.level, opt.m, z, opt.kind, mc)
                                   : moment_to_csv(opt.level, opt.m, z, opt.kind, mc));
    return 0;
  }

  if (opt.subcommand == "identity-gap") {
    TruncationPolicy policy = make_policy(opt);
    const double gap = even_power_identity_gap(opt.p, opt.m, z, policy);
    std::ostringstream ss;
    ss << "p,m,z_re,z_im,gap\n"
       << opt.p << ',' << opt.m << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
       << format_double(gap) << '\n';
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "riordan") {
    std::ostringstream ss;
    if (opt.table_k >= 1) {
      ss << "k,q,xi\n";
      for (int k = 1; k <= opt.table_k; ++k) {
        LaurentPoly poly = r_k_polynomial(k);
        for (int q = -(k - 1); q <= 1; ++q) ss << k << ',' << q << ',' << poly.at(q) << '\n';
      }
    } else if (opt.numbers_k >= 0) {
      ss << "k,R_k\n";
      for (int k = 0; k <= opt.numbers_k; ++k) ss << k << ',' << riordan_number(k).str() << '\n';
    } else {
      throw domain_error("riordan: pass --table K or --numbers K");
    }
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "constants") {
    TruncationPolicy policy = make_policy(opt);
    ExtremalConstants c = extremal_constants(opt.m, policy);
    std::ostringstream ss;
    ss << "m,sym_plus,sym_minus,sym1_plus,sym1_minus,gamma_star\n"
       << opt.m << ',' << format_double(c.sym_plus) << ',' << format_double(c.sym_minus) << ','
       << format_double(c.sym1_plus) << ',' << format_double(c.sym1_minus) << ','
       << format_double(c.gamma_star) << '\n';
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "growth") {
    TruncationPolicy policy = make_policy(opt);
    const int sgn = opt.sign_text == "-" ? -1 : 1;
    std::vector<double> grid;
    std::stringstream parse(opt.r_grid_text);
    std::string item;
    while (std::getline(parse, item, ',')) grid.push_back(std::stod(item));
    auto pts = growth_curve(opt.m, sgn, grid, policy);
    GrowthFit fit = fit_growth(pts);
    std::ostringstream ss;
    ss << "r,log_moment\n";
    for (const auto& [r, y] : pts) ss << format_double(r) << ',' << format_double(y) << '\n';
    ss << "# fit a*r*loglog(r)+b*r: a=" << format_double(fit.a) << " b=" << format_double(fit.b) << '\n';
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "empirical") {
    TruncationPolicy policy = make_policy(opt);
    auto forms = load_forms(opt);
    EnsembleReport rep = ensemble_report(forms, opt.m, z, opt.x, policy);
    emit(opt, opt.format == "json" ? report_to_json(rep) : report_to_csv(rep, opt.kind));
    return 0;
  }

  if (opt.subcommand == "trace-check") {
    auto forms = load_forms(opt);
    TraceCheckResult res = trace_check(forms, opt.hecke_m, opt.hecke_n, opt.x);
    std::ostringstream ss;
    ss << "level,m,n,residual,residual_signed,sum_weights\n"
       << opt.level << ',' << opt.hecke_m << ',' << opt.hecke_n << ',' << format_double(res.residual_plain)
       << ',' << format_double(res.residual_signed) << ',' << format_double(res.sum_weights) << '\n';
    emit(opt, ss.str());
    return 0;
  }

  if (opt.subcommand == "diagnostics") {
    auto forms = load_forms(opt);
    std::ostringstream ss;
    ss << "level,label,m,prime_cutoff,sum_sym,sum_cafe,mass_total,mass_near_max,mass_small,log_smoothed,"
          "in_high_class,in_low_class\n";
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (opt.form_index >= 0 && static_cast<std::size_t>(opt.form_index) != i) continue;
      const auto d = prime_sum_diagnostics(forms[i], opt.m, opt.class_c, opt.xi, opt.x);
      ss << opt.level << ',' << forms[i].label << ',' << opt.m << ',' << format_double(d.prime_cutoff) << ','
         << format_double(d.sum_sym) << ',' << format_double(d.sum_cafe) << ',' << format_double(d.mass_total)
         << ',' << format_double(d.mass_near_max) << ',' << format_double(d.mass_small) << ','
         << format_double(d.log_smoothed) << ',' << (d.in_high_class ? 1 : 0) << ','
         << (d.in_low_class ? 1 : 0) << '\n';
    }
    emit(opt, ss.str());
    return 0;
  }

  throw domain_error("unknown subcommand " + opt.subcommand);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"symmom: symmetric-power moment constants, SU(2) harmonics, Riordan-path combinatorics, and "
               "empirical Hecke-eigenvalue checks"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", opt.output, "write to file instead of stdout");
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--prime-cutoff", opt.prime_cutoff, "Euler products truncated at this prime bound");
    sub->add_option("--nu-max", opt.nu_max, "local power-series depth");
    sub->add_option("--nodes", opt.nodes, "Gauss-Legendre node count");
    sub->add_option("--tail", opt.tail, "tail handling: bounded or ignored")
        ->check(CLI::IsMember({"bounded", "ignored"}));
  };
  auto add_forms = [&](CLI::App* sub) {
    sub->add_option("--level", opt.level, "squarefree level N")->required();
    sub->add_option("--source", opt.source, "newform source: fixture or remote")
        ->check(CLI::IsMember({"fixture", "remote"}));
    sub->add_option("--fixture-dir", opt.fixture_dir, "directory holding newforms_<level>.json");
    sub->add_option("--db-base", opt.db_base, "remote database base URL (or SYMMOM_DB_BASE)");
    sub->add_option("--x", opt.x, "smoothing scale of the short L-value sums");
  };

  CLI::App* harm = app.add_subcommand(
      "harmonics", "harmonics mu^{z,nu}_{Sym^m,Sym^m'} of the series coefficients of D(X,Sym^m,g)^z "
                   "(--product: the Sym^2 x Sym^m product coefficients mu^{1,z,nu})");
  harm->add_option("--m", opt.m, "symmetric-power index")->required();
  harm->add_option("--z", opt.z_text, "complex order, 'a+bi'")->required();
  harm->add_option("--nu", opt.nu_max, "series coefficient index")->required();
  harm->add_flag("--product", opt.product, "expand D(X,Sym^2,g) D(X,Sym^m,g)^z instead");
  add_common(harm);

  CLI::App* lf = app.add_subcommand(
      "local-factor", "local moment factor int_SU(2) D(p^-s,Sym^m,g)^z D(p^-rho,twist,g) dg, computed by "
                      "quadrature and cross-checked against the harmonic series");
  lf->add_option("--p", opt.p, "prime")->required();
  lf->add_option("--m", opt.m, "symmetric-power index")->required();
  lf->add_option("--z", opt.z_text, "complex order")->required();
  lf->add_option("--s", opt.s, "exponent of the Sym^m factor (default 1)");
  lf->add_option("--rho", opt.rho, "exponent of the twist factor (default 1/2)");
  lf->add_option("--twist", opt.twist, "standard or sym2")->check(CLI::IsMember({"standard", "sym2"}));
  add_policy(lf);
  add_common(lf);

  CLI::App* mom = app.add_subcommand(
      "moment", "twisted moment constant L^{1,z}(1/2,1;St,Sym^m;N) (kind=half) or "
                "L^{1,z}(1,1;Sym^2,Sym^m;N) (kind=one) with truncation tail bound");
  mom->add_option("--level", opt.level, "squarefree level N")->required();
  mom->add_option("--m", opt.m, "symmetric-power index")->required();
  mom->add_option("--z", opt.z_text, "complex order")->required();
  mom->add_option("--kind", opt.kind, "half or one")->check(CLI::IsMember({"half", "one"}));
  add_policy(mom);
  add_common(mom);

  CLI::App* gap = app.add_subcommand(
      "identity-gap", "defect of the even-power local identity: |int D^z D(p^-1/2,St) - "
                      "(1-p^-2) int D^z D(p^-1,Sym^2)| (vanishes for even m, not for odd)");
  gap->add_option("--p", opt.p, "prime")->required();
  gap->add_option("--m", opt.m, "symmetric-power index")->required();
  gap->add_option("--z", opt.z_text, "complex order")->required();
  add_policy(gap);
  add_common(gap);

  CLI::App* rio = app.add_subcommand(
      "riordan", "partial Riordan path counts xi_{k,q} (the coefficients of R_k(p)) and Riordan numbers R_k");
  rio->add_option("--table", opt.table_k, "emit the xi_{k,q} triangle up to this k");
  rio->add_option("--numbers", opt.numbers_k, "emit Riordan numbers R_0..R_k");
  add_common(rio);

  CLI::App* cst = app.add_subcommand(
      "constants", "extremal constants Sym^m_+- (character extrema), Sym^{m,1}_+- (per-prime local-factor "
                   "extrema with Mertens-type sums) and gamma*");
  cst->add_option("--m", opt.m, "symmetric-power index")->required();
  add_policy(cst);
  add_common(cst);

  CLI::App* gro = app.add_subcommand(
      "growth", "growth curve r -> log L^{1,+-r}(1/2,1;St,Sym^m) with least-squares fit to "
                "a r loglog r + b r");
  gro->add_option("--m", opt.m, "symmetric-power index")->required();
  gro->add_option("--sign", opt.sign_text, "+ or -")->check(CLI::IsMember({"+", "-"}));
  gro->add_option("--r-grid", opt.r_grid_text, "comma-separated ascending orders r");
  add_policy(gro);
  add_common(gro);

  CLI::App* emp = app.add_subcommand(
      "empirical", "ensemble moments over the newforms of a level: sum omega* L(1/2,f) omega^z(x) versus the "
                   "predicted moment constant, plus the even-power comparison ratio");
  emp->add_option("--m", opt.m, "symmetric-power index")->required();
  emp->add_option("--z", opt.z_text, "complex order")->required();
  emp->add_option("--kind", opt.kind, "report row: half or one")->check(CLI::IsMember({"half", "one"}));
  add_forms(emp);
  add_policy(emp);
  add_common(emp);

  CLI::App* trc = app.add_subcommand(
      "trace-check", "residuals of the harmonic trace formula sum omega* lambda_f(m) lambda_f(n) = delta(m,n) "
                     "and its sign-weighted variant");
  trc->add_option("--hecke-m", opt.hecke_m, "first Hecke index (coprime to N)")->required();
  trc->add_option("--hecke-n", opt.hecke_n, "second Hecke index ((n,N^2) | N)")->required();
  add_forms(trc);
  add_common(trc);

  CLI::App* dia = app.add_subcommand(
      "diagnostics", "prime sums sum lambda_f(p^m)/p and sum lambda_f(p)^2/p over p <= log(2N), eigenvalue "
                     "concentration masses, and extremal-class membership flags");
  dia->add_option("--m", opt.m, "symmetric-power index")->required();
  dia->add_option("--form", opt.form_index, "restrict to one form by index");
  dia->add_option("--C", opt.class_c, "class constant C");
  dia->add_option("--xi", opt.xi, "concentration parameter xi (default log_3(20N))");
  add_forms(dia);
  add_common(dia);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  opt.subcommand = app.get_subcommands().front()->get_name();
  try {
    return run(opt);
  } catch (const route_disagreement_error& e) {
    std::cerr << "error (numerical): " << e.what() << '\n';
    return 2;
  } catch (const network_error& e) {
    std::cerr << "error (network): " << e.what() << '\n';
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error (input): " << e.what() << '\n';
    return 1;
  } catch (const resource_error& e) {
    std::cerr << "error (input): " << e.what() << '\n';
    return 1;
  } catch (const coverage_error& e) {
    std::cerr << "error (input): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error (numerical): " << e.what() << '\n';
    return 2;
  }
}
