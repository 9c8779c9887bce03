#include "turan/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "turan/elliptic.hpp"

namespace turan {

bool SignChangeCertificate::valid() const {
  return r_lo < r_hi && value_lo * value_hi < 0.0 && std::abs(value_lo) > 10.0 * eval_eps &&
         std::abs(value_hi) > 10.0 * eval_eps;
}

std::string SignChangeCertificate::to_json() const {
  nlohmann::json j;
  j["function"] = function_label;
  j["params"] = nlohmann::json::parse(params_json.empty() ? "{}" : params_json);
  j["r_lo"] = r_lo;
  j["r_hi"] = r_hi;
  j["value_lo"] = value_lo;
  j["value_hi"] = value_hi;
  j["eval_eps"] = eval_eps;
  return j.dump();
}

ScanResult scan_sign(const std::function<double(double)>& fn, const std::string& label,
                     const std::string& params_json, double r_lo, double r_hi, int steps,
                     double eps) {
  if (steps < 2) throw std::domain_error("scan_sign: steps must be >= 2");
  if (!(r_lo < r_hi)) throw std::domain_error("scan_sign: requires r_lo < r_hi");
  ScanResult out;
  double prev_x = 0.0, prev_v = 0.0;
  bool have_prev = false;
  for (int i = 0; i < steps; ++i) {
    double x = r_lo + (r_hi - r_lo) * i / (steps - 1);
    double v;
    try {
      v = fn(x);
    } catch (const std::exception&) {
      out.failed_samples.push_back(x);
      have_prev = false;
      continue;
    }
    if (have_prev && prev_v * v < 0.0) {
      // refine the bracket; the sign change is preserved at every step
      double lo = prev_x, hi = x, flo = prev_v, fhi = v;
      while (hi - lo > 1e-6) {
        double mid = 0.5 * (lo + hi);
        double fmid;
        try {
          fmid = fn(mid);
        } catch (const std::exception&) {
          break;
        }
        if (fmid == 0.0) {
          // nudge the midpoint into a signed bracket half
          lo = mid - 0.25 * (hi - lo);
          hi = mid + 0.25 * (hi - lo);
          flo = fn(lo);
          fhi = fn(hi);
          if (flo * fhi >= 0.0) break;
          continue;
        }
        if (flo * fmid < 0.0) {
          hi = mid;
          fhi = fmid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      SignChangeCertificate cert;
      cert.function_label = label;
      cert.params_json = params_json;
      cert.r_lo = lo;
      cert.r_hi = hi;
      cert.value_lo = flo;
      cert.value_hi = fhi;
      cert.eval_eps = eps;
      if (cert.valid()) out.certificates.push_back(cert);
    }
    prev_x = x;
    prev_v = v;
    have_prev = true;
  }
  return out;
}

GridSpec default_grid(Chain chain) {
  GridSpec spec;
  spec.name = "default";
  spec.chain = chain;
  switch (chain) {
    case Chain::ineqf2:
    case Chain::ineqlam1:
    case Chain::ineqlam1p:
    case Chain::ineqa1pp:
      spec.axes = {{"a", 0.1, 0.9, 9, false},
                   {"r", 0.1, 0.9, 9, false},
                   {"n", 0, 3, 4, false}};
      break;
    case Chain::ineqlam2:
    case Chain::ineqlam3:
    case Chain::ineq2g1:
      spec.axes = {{"a", 0.25, 1.0, 4, false},
                   {"b1", 0.5, 1.0, 2, false},
                   {"b2", 1.25, 2.0, 2, false},
                   {"r", 0.1, 0.9, 9, false}};
      break;
    case Chain::ineqlam23:
    case Chain::ineqlam23p:
      spec.axes = {{"a", 0.25, 1.0, 4, false},
                   {"b1", 0.5, 1.0, 2, false},
                   {"b2", 1.25, 2.0, 2, false},
                   {"r", 0.1, 0.9, 9, false},
                   {"n", 0, 3, 4, false}};
      break;
    case Chain::ineqwv:
    case Chain::ineqh14:
    case Chain::ineq2g2:
      spec.axes = {{"r", 0.05, 0.95, 19, false}};
      break;
  }
  return spec;
}

namespace {

std::vector<double> axis_values(const Axis& ax) {
  if (ax.steps < 1) throw std::domain_error("verify_grid: axis steps must be >= 1");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(ax.steps));
  for (int i = 0; i < ax.steps; ++i) {
    double t = ax.steps == 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * i / (ax.steps - 1);
    vals.push_back(ax.log_toward_one ? 1.0 - std::pow(10.0, -t) : t);
  }
  return vals;
}

void assign(ChainArgs& args, const std::string& name, double value) {
  if (name == "a") args.a = value;
  else if (name == "b1") args.b1 = value;
  else if (name == "b2") args.b2 = value;
  else if (name == "r") args.r = value;
  else if (name == "n") args.n = static_cast<int>(std::lround(value));
  else throw std::invalid_argument("verify_grid: unknown axis '" + name + "'");
}

nlohmann::json point_json(const ChainArgs& g, Chain chain) {
  nlohmann::json j;
  j["a"] = g.a;
  if (chain_uses_triple(chain)) {
    j["b1"] = g.b1;
    j["b2"] = g.b2;
  }
  j["r"] = g.r;
  if (chain_uses_n(chain)) j["n"] = g.n;
  return j;
}

}  // namespace

VerificationReport verify_grid(const GridSpec& spec,
                               std::vector<std::pair<ChainArgs, BoundReport>>* rows) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  std::vector<std::vector<double>> values;
  values.reserve(spec.axes.size());
  for (const Axis& ax : spec.axes) values.push_back(axis_values(ax));
  std::vector<std::size_t> idx(spec.axes.size(), 0);
  bool done = spec.axes.empty();
  while (!done) {
    ChainArgs args;
    args.eps = spec.eps;
    for (std::size_t i = 0; i < spec.axes.size(); ++i)
      assign(args, spec.axes[i].name, values[i][idx[i]]);
    ++report.total;
    try {
      BoundReport br = bound_chain(spec.chain, args);
      if (br.pass) {
        ++report.passed;
      } else {
        report.failures.emplace_back(args, br);
      }
      if (rows) rows->emplace_back(args, br);
    } catch (const std::exception& e) {
      BoundReport br;
      br.chain = chain_name(spec.chain);
      br.pass = false;
      br.note = std::string("evaluation error: ") + e.what();
      report.failures.emplace_back(args, br);
      if (rows) rows->emplace_back(args, br);
    }
    // row-major increment
    std::size_t level = spec.axes.size();
    while (level > 0) {
      --level;
      if (++idx[level] < values[level].size()) break;
      idx[level] = 0;
      if (level == 0) done = true;
    }
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["total"] = total;
  j["passed"] = passed;
  j["runtime_ms"] = runtime_ms;
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& [args, br] : failures) {
    nlohmann::json f;
    f["point"] = point_json(args, chain_from_name(br.chain));
    f["report"] = nlohmann::json::parse(br.to_json());
    fs.push_back(f);
  }
  j["failures"] = fs;
  return j.dump();
}

std::string rows_to_csv(const std::vector<std::pair<ChainArgs, BoundReport>>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "a,b1,b2,r,n";
  if (!rows.empty()) {
    for (const auto& [label, value] : rows.front().second.links) out << "," << label;
  }
  out << ",slackmin,verdict\n";
  for (const auto& [args, br] : rows) {
    out << args.a << "," << args.b1 << "," << args.b2 << "," << args.r << "," << args.n;
    for (const auto& [label, value] : br.links) out << "," << value;
    out << "," << br.slack_min << "," << (br.pass ? "pass" : "fail") << "\n";
  }
  return out.str();
}

std::string CounterexampleFinding::to_json() const {
  nlohmann::json j;
  switch (status) {
    case Status::found: j["status"] = "found"; break;
    case Status::no_small_r_counterexample: j["status"] = "no_small_r_counterexample"; break;
    case Status::inconclusive: j["status"] = "inconclusive"; break;
  }
  j["a"] = a;
  auto put = [&j](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  put("r_small", r_small);
  put("lambda_small", lambda_small);
  put("r_large", r_large);
  put("lambda_large", lambda_large);
  return j.dump();
}

CounterexampleFinding counterexample_certificate(double a, double eps) {
  if (!(a > 0.0 && a < 1.0))
    throw std::domain_error("counterexample_certificate: a must be in (0,1)");
  CounterexampleFinding out;
  out.a = a;
  double resolve = 10.0 * eps;

  // small-r sweep over (0, 0.2], log-spaced
  bool small_found = false, small_all_above = true;
  for (double r : {0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001, 1e-4}) {
    double v = lambda_family(LambdaKind::lambda, a, r, eps);
    if (v < 1.0 - resolve) {
      out.r_small = r;
      out.lambda_small = v;
      small_found = true;
      small_all_above = false;
      break;
    }
    if (v <= 1.0 + resolve) small_all_above = false;  // unresolved sample
  }

  // large-r sweep over [0.9, 1)
  for (double r : {0.9, 0.99, 0.999, 1.0 - 1e-4, 1.0 - 1e-5, 1.0 - 1e-6}) {
    double v = lambda_family(LambdaKind::lambda, a, r, eps);
    if (v > 1.0 + resolve) {
      out.r_large = r;
      out.lambda_large = v;
      break;
    }
  }

  if (small_found && out.r_large) {
    out.status = CounterexampleFinding::Status::found;
  } else if (!small_found && small_all_above) {
    out.status = CounterexampleFinding::Status::no_small_r_counterexample;
  } else {
    out.status = CounterexampleFinding::Status::inconclusive;
  }
  return out;
}

std::string TrendReport::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["target"] = std::isinf(target) ? nlohmann::json("inf") : nlohmann::json(target);
  j["ks"] = ks;
  j["values"] = values;
  j["gaps"] = gaps;
  j["monotone"] = monotone;
  j["divergence_threshold"] = divergence_threshold;
  j["exceeded_threshold"] = exceeded_threshold;
  return j.dump();
}

TrendReport trend_to_limit(const std::function<double(double)>& fn, const std::string& label,
                           double target, const std::vector<int>& ks,
                           double divergence_threshold) {
  if (ks.size() < 2) throw std::domain_error("trend_to_limit: need at least two ks");
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i] >= ks[i + 1]) throw std::domain_error("trend_to_limit: ks must be ascending");
  }
  TrendReport rep;
  rep.label = label;
  rep.target = target;
  rep.ks = ks;
  rep.divergence_threshold = divergence_threshold;
  for (int k : ks) {
    double r = 1.0 - std::pow(10.0, -k);
    double v = fn(r);
    rep.values.push_back(v);
    if (!std::isinf(target)) rep.gaps.push_back(std::abs(v - target));
  }
  rep.monotone = true;
  if (std::isinf(target)) {
    for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) {
      if (!(rep.values[i + 1] > rep.values[i])) rep.monotone = false;
    }
    rep.exceeded_threshold = rep.values.back() > divergence_threshold;
  } else {
    for (std::size_t i = 0; i + 1 < rep.gaps.size(); ++i) {
      if (!(rep.gaps[i + 1] < rep.gaps[i])) rep.monotone = false;
    }
    rep.exceeded_threshold = false;
  }
  return rep;
}

std::function<double(double)> make_r_function(const std::string& name, double a, double b1,
                                              double b2, double eps) {
  if (name == "lambda" || name == "lambda1") {
    LambdaKind k = name == "lambda" ? LambdaKind::lambda : LambdaKind::lambda1;
    return [k, a, eps](double r) { return lambda_family(k, a, r, eps); };
  }
  if (name == "lambda2" || name == "lambda3") {
    LambdaKind k = name == "lambda2" ? LambdaKind::lambda2 : LambdaKind::lambda3;
    return [k, a, b1, b2, eps](double r) { return lambda_family(k, a, b1, b2, r, eps); };
  }
  if (name == "lambda_minus_1")
    return [a, eps](double r) { return lambda_family(LambdaKind::lambda, a, r, eps) - 1.0; };
  if (name == "lambda2_minus_1")
    return [a, b1, b2, eps](double r) {
      return lambda_family(LambdaKind::lambda2, a, b1, b2, r, eps) - 1.0;
    };
  if (name == "f1" || name == "f2") {
    SmallF w = name == "f1" ? SmallF::f1 : SmallF::f2;
    return [w, a, eps](double r) { return f_small(w, a, r, eps); };
  }
  if (name == "f3" || name == "f4") {
    SmallF w = name == "f3" ? SmallF::f3 : SmallF::f4;
    return [w, a, b1, b2, eps](double r) { return f_small(w, a, b1, b2, r, eps); };
  }
  if (name == "f5") return [eps](double r) { return f5(r, eps); };
  if (name == "f5_prime") return [eps](double r) { return f5_prime(r, eps); };
  if (name == "f6") return [a, eps](double r) { return f6(a, r, eps); };
  if (name == "f7") return [eps](double r) { return f7(r, eps); };
  if (name == "f_ratio") return [a, b1, eps](double r) { return f_ratio(a, b1, r, eps); };
  if (name == "h9") return [a, b1, b2, eps](double r) { return h9(a, b1, b2, r, eps); };
  if (name == "h10") return [a, b1, b2, eps](double r) { return h10(a, b1, b2, r, eps); };
  if (name == "h11") return [eps](double r) { return h11(r, eps); };
  if (name == "h13") return [eps](double r) { return h13(r, eps); };
  if (name == "h15") return [a, eps](double r) { return h15(a, r, eps); };
  if (name == "f8") return [a, b1, b2, eps](double r) { return f8(a, b1, b2, r, eps); };
  if (name == "h1") return [a, eps](double r) { return h1(a, r, eps); };
  if (name == "h2") return [a, eps](double r) { return h2(a, r, eps); };
  if (name == "K")
    return [a, eps](double r) { return generalized_k(a, Modulus(r), eps); };
  if (name == "E")
    return [a, eps](double r) { return generalized_e(a, Modulus(r), eps); };
  if (name == "agm_k") return [](double r) { return agm_k(r); };
  if (name == "arth_ratio") return [](double r) { return arth_ratio(r); };
  throw std::invalid_argument("unknown function '" + name + "'");
}

std::vector<std::string> r_function_names() {
  return {"lambda",  "lambda1", "lambda2", "lambda3", "lambda_minus_1", "lambda2_minus_1",
          "f1",      "f2",      "f3",      "f4",      "f5",             "f5_prime",
          "f6",      "f7",      "f_ratio", "h9",      "h10",            "h11",
          "h13",     "h15",     "f8",      "h1",      "h2",             "K",
          "E",       "agm_k",   "arth_ratio"};
}

}  // namespace turan
