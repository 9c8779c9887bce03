#include "turan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/coeff_engine.hpp"
#include "turan/elliptic.hpp"
#include "turan/functionals.hpp"
#include "turan/harness.hpp"
#include "turan/hyp2f1.hpp"

namespace turan::cli {

namespace {

struct Options {
  std::string fn;
  std::string seq;
  std::string suite;
  std::string grid = "default";
  std::string output = "pretty";
  std::string out_path;
  std::string a = "1/2", b1, b2;
  double r = std::numeric_limits<double>::quiet_NaN();
  int n = -1;
  int count = 8;
  double eps = 1e-12;
  bool exact = false;
  double rlo = 0.01, rhi = 0.99;
  int steps = 99;
  int kmin = 2, kmax = 6;
};

void emit(const Options& opt, std::ostream& out, const std::string& payload) {
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw std::runtime_error("cannot open output file " + opt.out_path);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
    return;
  }
  out << payload;
  if (!payload.empty() && payload.back() != '\n') out << '\n';
}

double parse_param(const std::string& text, const char* who) {
  if (text.empty()) throw std::domain_error(std::string(who) + " is required for this call");
  return Rational::from_string(text).to_double();
}

// --- eval ------------------------------------------------------------------

bool is_constant_fn(const std::string& name) {
  return name == "alpha" || name == "eta" || name == "beta" || name == "alphabar" ||
         name == "etabar" || name == "betabar" || name == "bbar";
}

double eval_constant(const Options& opt) {
  double a = parse_param(opt.a, "--a");
  if (opt.fn == "bbar") return b_bar(a);
  if (opt.fn == "alpha" || opt.fn == "eta" || opt.fn == "beta") {
    SymmetricParams p = constants_symmetric(a);
    return opt.fn == "alpha" ? p.alpha : opt.fn == "eta" ? p.eta : p.beta;
  }
  TuranParams p =
      constants_general(a, parse_param(opt.b1, "--b1"), parse_param(opt.b2, "--b2"));
  return opt.fn == "alphabar" ? p.alpha_bar : opt.fn == "etabar" ? p.eta_bar : p.beta_bar;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  double value;
  double a = parse_param(opt.a, "--a");
  double b1 = opt.b1.empty() ? 0.0 : parse_param(opt.b1, "--b1");
  double b2 = opt.b2.empty() ? 0.0 : parse_param(opt.b2, "--b2");
  if (is_constant_fn(opt.fn)) {
    value = eval_constant(opt);
  } else if (opt.fn == "h12") {
    if (opt.n < 0) throw std::domain_error("--n is required for h12");
    value = h12(opt.n, opt.r, opt.eps);
  } else {
    if (std::isnan(opt.r)) throw std::domain_error("--r is required for this function");
    value = make_r_function(opt.fn, a, b1, b2, opt.eps)(opt.r);
  }
  std::ostringstream payload;
  payload.precision(17);
  if (opt.output == "json") {
    nlohmann::json j;
    j["fn"] = opt.fn;
    j["a"] = a;
    if (!opt.b1.empty()) j["b1"] = b1;
    if (!opt.b2.empty()) j["b2"] = b2;
    if (!std::isnan(opt.r)) j["r"] = opt.r;
    if (opt.n >= 0) j["n"] = opt.n;
    j["value"] = value;
    payload << j.dump();
  } else if (opt.output == "csv") {
    payload << "fn,a,b1,b2,r,n,value\n"
            << opt.fn << "," << a << "," << opt.b1 << "," << opt.b2 << ",";
    if (!std::isnan(opt.r)) payload << opt.r;
    payload << ",";
    if (opt.n >= 0) payload << opt.n;
    payload << "," << value;
  } else {
    payload << opt.fn << " = " << value;
  }
  emit(opt, out, payload.str());
  return 0;
}

// --- coeffs ----------------------------------------------------------------

CoeffTable build_table(const Options& opt) {
  int degree = opt.count - 1;
  if (degree < 0) throw std::domain_error("--n must be >= 1 (number of coefficients)");
  auto a = [&] { return Rational::from_string(opt.a); };
  auto b1 = [&] {
    if (opt.b1.empty()) throw std::domain_error("--b1 is required for this table");
    return Rational::from_string(opt.b1);
  };
  auto b2 = [&] {
    if (opt.b2.empty()) throw std::domain_error("--b2 is required for this table");
    return Rational::from_string(opt.b2);
  };
  if (opt.seq == "an1") return an1_table(a(), b1(), b2(), degree);
  if (opt.seq == "an2") return an2_table(degree);
  if (opt.seq == "ak") return ak_table(a(), degree);
  if (opt.seq == "bn") return bn_table(a(), b1(), b2(), degree);
  if (opt.seq == "cn") return cn_table(a(), degree);
  if (opt.seq == "dn") return dn_table(a(), degree);
  if (opt.seq == "bbarn") return bbarn_table(a(), b1(), b2(), degree);
  if (opt.seq == "btilde") return btilde_table(a(), b1(), b2(), degree);
  if (opt.seq == "an3") return an3_table(degree);
  if (opt.seq == "an4") return an4_table(a(), degree);
  throw std::domain_error("unknown table '" + opt.seq +
                          "' (an1 an2 ak bn cn dn bbarn btilde an3 an4)");
}

int cmd_coeffs(const Options& opt, std::ostream& out) {
  CoeffTable t = build_table(opt);
  std::ostringstream payload;
  payload.precision(17);
  if (opt.output == "json") {
    payload << t.to_json();
  } else {
    if (opt.output == "csv") payload << "k,value\n";
    for (int k = 0; k <= t.degree; ++k) {
      const char* sep = opt.output == "csv" ? "," : " ";
      if (t.exact() && opt.exact) {
        payload << k << sep << t.values[k].str() << "\n";
      } else {
        payload << k << sep << t.value_as_double(k) << "\n";
      }
    }
  }
  emit(opt, out, payload.str());
  return 0;
}

// --- verify ----------------------------------------------------------------

GridSpec parse_inline_grid(Chain chain, const std::string& text, double eps) {
  GridSpec spec;
  spec.name = "inline";
  spec.chain = chain;
  spec.eps = eps;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::domain_error("bad grid axis '" + part + "'");
    Axis ax;
    ax.name = part.substr(0, eq);
    std::string rest = part.substr(eq + 1);
    std::replace(rest.begin(), rest.end(), ':', ' ');
    std::stringstream fs(rest);
    std::string scale;
    if (!(fs >> ax.lo >> ax.hi >> ax.steps)) throw std::domain_error("bad grid axis '" + part + "'");
    if (fs >> scale) ax.log_toward_one = scale == "log";
    spec.axes.push_back(ax);
  }
  if (spec.axes.empty()) throw std::domain_error("empty grid spec");
  return spec;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  Chain chain = chain_from_name(opt.suite);
  GridSpec spec = opt.grid == "default" ? default_grid(chain)
                                        : parse_inline_grid(chain, opt.grid, opt.eps);
  spec.eps = opt.eps;
  std::vector<std::pair<ChainArgs, BoundReport>> rows;
  VerificationReport rep = verify_grid(spec, &rows);
  std::ostringstream payload;
  payload.precision(17);
  if (opt.output == "json") {
    payload << rep.to_json();
  } else if (opt.output == "csv") {
    payload << rows_to_csv(rows);
  } else {
    payload << chain_name(chain) << ": " << rep.passed << "/" << rep.total << " passed ("
            << rep.runtime_ms << " ms)";
    for (const auto& [args, br] : rep.failures) {
      payload << "\n  fail at a=" << args.a;
      if (chain_uses_triple(chain)) payload << " b1=" << args.b1 << " b2=" << args.b2;
      payload << " r=" << args.r;
      if (chain_uses_n(chain)) payload << " n=" << args.n;
      payload << " slack_min=" << br.slack_min;
      if (!br.note.empty()) payload << " (" << br.note << ")";
    }
  }
  emit(opt, out, payload.str());
  return rep.passed == rep.total ? 0 : 1;
}

// --- scan ------------------------------------------------------------------

int cmd_scan(const Options& opt, std::ostream& out) {
  double a = parse_param(opt.a, "--a");
  double b1 = opt.b1.empty() ? 0.0 : parse_param(opt.b1, "--b1");
  double b2 = opt.b2.empty() ? 0.0 : parse_param(opt.b2, "--b2");
  auto fn = make_r_function(opt.fn, a, b1, b2, opt.eps);
  nlohmann::json params;
  params["a"] = a;
  if (!opt.b1.empty()) params["b1"] = b1;
  if (!opt.b2.empty()) params["b2"] = b2;
  ScanResult res = scan_sign(fn, opt.fn, params.dump(), opt.rlo, opt.rhi, opt.steps, opt.eps);
  std::ostringstream payload;
  payload.precision(17);
  if (opt.output == "json") {
    nlohmann::json j;
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : res.certificates) certs.push_back(nlohmann::json::parse(c.to_json()));
    j["certificates"] = certs;
    j["failed_samples"] = res.failed_samples;
    payload << j.dump();
  } else if (opt.output == "csv") {
    payload << "function,r_lo,r_hi,value_lo,value_hi,eval_eps\n";
    for (const auto& c : res.certificates) {
      payload << c.function_label << "," << c.r_lo << "," << c.r_hi << "," << c.value_lo << ","
              << c.value_hi << "," << c.eval_eps << "\n";
    }
  } else {
    payload << opt.fn << ": " << res.certificates.size() << " sign change(s)";
    for (const auto& c : res.certificates) {
      payload << "\n  [" << c.r_lo << ", " << c.r_hi << "] values " << c.value_lo << " -> "
              << c.value_hi;
    }
    if (!res.failed_samples.empty())
      payload << "\n  skipped " << res.failed_samples.size() << " failed sample(s)";
  }
  emit(opt, out, payload.str());
  return 0;
}

// --- limits ----------------------------------------------------------------

int cmd_limits(const Options& opt, std::ostream& out) {
  double a = parse_param(opt.a, "--a");
  double b1 = opt.b1.empty() ? 0.0 : parse_param(opt.b1, "--b1");
  double b2 = opt.b2.empty() ? 0.0 : parse_param(opt.b2, "--b2");
  double target;
  if (opt.fn == "f1" || opt.fn == "f3") {
    target = std::numeric_limits<double>::infinity();
  } else if (opt.fn == "f2") {
    SymmetricParams p = constants_symmetric(a);
    target = p.alpha * p.beta;
  } else if (opt.fn == "lambda") {
    target = constants_symmetric(a).alpha;
  } else if (opt.fn == "f4") {
    TuranParams p = constants_general(a, parse_param(opt.b1, "--b1"), parse_param(opt.b2, "--b2"));
    target = p.alpha_bar * p.beta_bar;
  } else if (opt.fn == "lambda2") {
    TuranParams p = constants_general(a, parse_param(opt.b1, "--b1"), parse_param(opt.b2, "--b2"));
    target = p.alpha_bar;
  } else {
    throw std::domain_error("limits supports fn in {f1, f2, f3, f4, lambda, lambda2}");
  }
  if (opt.kmin >= opt.kmax) throw std::domain_error("--kmin must be < --kmax");
  std::vector<int> ks;
  for (int k = opt.kmin; k <= opt.kmax; ++k) ks.push_back(k);
  auto fn = make_r_function(opt.fn, a, b1, b2, opt.eps);
  TrendReport rep = trend_to_limit(fn, opt.fn, target, ks);
  std::ostringstream payload;
  payload.precision(17);
  if (opt.output == "json") {
    payload << rep.to_json();
  } else if (opt.output == "csv") {
    payload << "k,value,gap\n";
    for (std::size_t i = 0; i < rep.ks.size(); ++i) {
      payload << rep.ks[i] << "," << rep.values[i] << ",";
      if (i < rep.gaps.size()) payload << rep.gaps[i];
      payload << "\n";
    }
  } else {
    payload << rep.label << " -> " << (std::isinf(target) ? "divergence" : "limit") << ", "
            << (rep.monotone ? "monotone approach" : "NOT monotone");
    for (std::size_t i = 0; i < rep.ks.size(); ++i) {
      payload << "\n  k=" << rep.ks[i] << " value=" << rep.values[i];
      if (i < rep.gaps.size()) payload << " gap=" << rep.gaps[i];
    }
  }
  emit(opt, out, payload.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"turan: hypergeometric ratio functionals, elliptic integrals, "
               "exact coefficient tables, and inequality verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_r) {
    sub->add_option("--a", opt.a, "parameter a (rational like 1/2 or decimal)");
    sub->add_option("--b1", opt.b1, "parameter b1");
    sub->add_option("--b2", opt.b2, "parameter b2");
    sub->add_option("--eps", opt.eps, "evaluation tolerance");
    sub->add_option("--output", opt.output, "output format: json, csv, pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--out", opt.out_path, "write output to this file");
    if (with_r) sub->add_option("--r", opt.r, "argument r in (0,1)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a functional at a point");
  add_common(eval, true);
  eval->add_option("--fn", opt.fn, "function name")->required();
  eval->add_option("--n", opt.n, "truncation index (h12)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "print a coefficient table");
  add_common(coeffs, false);
  coeffs->add_option("--seq", opt.seq, "table kind")->required();
  coeffs->add_option("--n", opt.count, "number of coefficients to print")->required();
  coeffs->add_flag("--exact", opt.exact, "print exact rationals p/q");

  CLI::App* verify = app.add_subcommand("verify", "run a bound chain over a grid");
  add_common(verify, false);
  verify->add_option("--suite", opt.suite, "chain name, e.g. ineqA1pp")->required();
  verify->add_option("--grid", opt.grid, "default, or inline axes a=lo:hi:steps[:log],...");

  CLI::App* scan = app.add_subcommand("scan", "locate sign changes of a functional in r");
  add_common(scan, false);
  scan->add_option("--fn", opt.fn, "function name")->required();
  scan->add_option("--rlo", opt.rlo, "scan start");
  scan->add_option("--rhi", opt.rhi, "scan end");
  scan->add_option("--steps", opt.steps, "sample count");

  CLI::App* limits = app.add_subcommand("limits", "trend toward the r->1 limit");
  add_common(limits, false);
  limits->add_option("--fn", opt.fn, "f1, f2, f3, f4, lambda, lambda2")->required();
  limits->add_option("--kmin", opt.kmin, "first exponent k of r=1-10^-k");
  limits->add_option("--kmax", opt.kmax, "last exponent k");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, out);
    if (coeffs->parsed()) return cmd_coeffs(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (scan->parsed()) return cmd_scan(opt, out);
    return cmd_limits(opt, out);
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace turan::cli
