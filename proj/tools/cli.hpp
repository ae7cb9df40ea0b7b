#ifndef BIGM1_TOOLS_CLI_HPP
#define BIGM1_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bigm1/quadrature.hpp"
#include "bigm1/sampling.hpp"
#include "bigm1/verify.hpp"

namespace bigm1::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct CliConfig {
  std::string alpha = "1";
  std::string beta = "1";
  std::string c = "1/2";
  unsigned nmax = 10;
  std::uint64_t seed = 1;
  unsigned samples = 0;
  std::string format = "json";
  std::string out;
};

/// Thrown for bad configuration; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline Params parse_params(const CliConfig& cfg) {
  auto one = [](const std::string& name, const std::string& text) {
    try {
      return parse_rational(text);
    } catch (const ParseError& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  };
  return {one("alpha", cfg.alpha), one("beta", cfg.beta), one("c", cfg.c)};
}

inline nlohmann::ordered_json params_json(const Params& p) {
  return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)}, {"c", to_string(p.c)}};
}

inline nlohmann::ordered_json coeffs_json(const Poly& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

inline std::string coeffs_csv(const Poly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += (s.empty() ? "" : " ") + to_string(c);
  return s;
}

inline Poly poly_from_json(const nlohmann::json& coeffs) {
  std::vector<Rational> c;
  for (const auto& v : coeffs) c.push_back(parse_rational(v.get<std::string>()));
  return Poly(std::move(c));
}

/// One row of the sequence/table schema. Missing values print as null (JSON)
/// or an empty field (CSV).
struct SeqRow {
  unsigned n = 0;
  std::optional<Rational> lambda, b, u, nu, kappa;
  Poly coeffs;
};

inline std::string emit_rows(const std::vector<SeqRow>& rows, const std::string& format, bool ladder_columns) {
  auto opt = [](const std::optional<Rational>& v) { return v ? nlohmann::ordered_json(to_string(*v)) : nlohmann::ordered_json(); };
  auto opt_csv = [](const std::optional<Rational>& v) { return v ? to_string(*v) : std::string(); };
  if (format == "csv") {
    std::ostringstream os;
    os << "n,lambda,b,u" << (ladder_columns ? ",nu,kappa" : "") << ",coeffs\n";
    for (const auto& r : rows) {
      os << r.n << ',' << opt_csv(r.lambda) << ',' << opt_csv(r.b) << ',' << opt_csv(r.u);
      if (ladder_columns) os << ',' << opt_csv(r.nu) << ',' << opt_csv(r.kappa);
      os << ',' << coeffs_csv(r.coeffs) << '\n';
    }
    return os.str();
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["lambda"] = opt(r.lambda);
    j["b"] = opt(r.b);
    j["u"] = opt(r.u);
    if (ladder_columns) {
      j["nu"] = opt(r.nu);
      j["kappa"] = opt(r.kappa);
    }
    j["coeffs"] = coeffs_json(r.coeffs);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

inline std::vector<Poly> read_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_array()) throw UsageError(path + ": expected an array of sequence rows");
  std::vector<Poly> seq;
  for (const auto& row : j) {
    if (!row.contains("coeffs")) throw UsageError(path + ": row without \"coeffs\"");
    try {
      seq.push_back(poly_from_json(row["coeffs"]));
    } catch (const ParseError& e) {
      throw UsageError(path + ": " + e.what());
    }
    if (!seq.back().is_monic() || seq.back().degree() != static_cast<int>(seq.size()) - 1)
      throw UsageError(path + ": row " + std::to_string(seq.size() - 1) + " is not monic of matching degree");
  }
  return seq;
}

inline std::string fixed_digits(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Exact big -1 Jacobi polynomials, Dunkl-type operators and two-interval quadrature"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    add_common(app);

    unsigned eval_n = 0;
    std::string eval_x = "0";
    auto* eval = app.add_subcommand("eval", "Print P_n(x) exactly");
    eval->add_option("--n", eval_n, "degree")->required();
    eval->add_option("--x", eval_x, "rational point")->required();

    auto* table = app.add_subcommand("table", "Per-degree lambda_n, b_n, u_n, nu_n, kappa_n and P_n coefficients");
    auto* verify = app.add_subcommand("verify", "Run every exact identity at the parameters and random samples");
    auto* ladder = app.add_subcommand("ladder", "Lowering and raising reports per degree");

    std::string in_path;
    std::vector<std::string> nodes;
    auto* chris = app.add_subcommand("christoffel", "Christoffel transforms of a monic sequence");
    chris->add_option("--in", in_path, "sequence JSON (defaults to the family at the parameters)");
    chris->add_option("--node", nodes, "transform node a; repeat for successive transforms")->required();

    unsigned quad_n = 8;
    int digits = 17;
    auto* quad = app.add_subcommand("quad", "Gauss rule for the two-interval weight");
    quad->add_option("--N", quad_n, "number of nodes")->check(CLI::PositiveNumber);
    quad->add_option("--digits", digits, "printed significant digits")->check(CLI::Range(1, 21));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (cfg_.format != "json" && cfg_.format != "csv") {
      err_ << "error: --format must be json or csv\n";
      return kUsage;
    }

    try {
      if (*eval) return cmd_eval(eval_n, eval_x);
      if (*table) return cmd_table();
      if (*verify) return cmd_verify();
      if (*ladder) return cmd_ladder();
      if (*chris) return cmd_christoffel(in_path, nodes);
      if (*quad) return cmd_quad(quad_n, digits);
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const DegenerateParams& e) {
      err_ << "error: DegenerateParams: " << e.what() << "\n";
      return kUsage;
    } catch (const NotPolynomialRegime& e) {
      err_ << "error: NotPolynomialRegime: " << e.what() << "\n";
      return kUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kCheckFailed;
    }
    return kUsage;
  }

  const CliConfig& config() const { return cfg_; }

 private:
  void add_common(CLI::App& app) {
    app.add_option("--alpha", cfg_.alpha, "alpha as p/q");
    app.add_option("--beta", cfg_.beta, "beta as p/q");
    app.add_option("--c", cfg_.c, "c as p/q");
    app.add_option("--nmax", cfg_.nmax, "highest degree");
    app.add_option("--seed", cfg_.seed, "seed for random parameter samples");
    app.add_option("--samples", cfg_.samples, "number of random parameter samples (verify)");
    app.add_option("--format", cfg_.format, "json or csv");
    app.add_option("--out", cfg_.out, "output file (default stdout)");
  }

  int emit(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return kOk;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg_.out);
    f << text;
    return kOk;
  }

  int cmd_eval(unsigned n, const std::string& x_text) {
    const Params p = parse_params(cfg_);
    Rational x;
    try {
      x = parse_rational(x_text);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--x: ") + e.what());
    }
    validate_family(p, n);
    const MonicPolySeq seq(p);
    return emit(to_string(seq[n](x)) + "\n");
  }

  int cmd_table() {
    const Params p = parse_params(cfg_);
    validate_family(p, cfg_.nmax);
    const MonicPolySeq seq(p);
    std::vector<SeqRow> rows;
    for (unsigned n = 0; n <= cfg_.nmax; ++n)
      rows.push_back({n, lambda_n(n, p), b_coeff(n, p), u_coeff(n, p), nu_n(n, p), kappa_n(n, p), seq[n]});
    return emit(emit_rows(rows, cfg_.format, true));
  }

  int cmd_verify() {
    const Params p = parse_params(cfg_);
    validate_family(p, cfg_.nmax);
    std::vector<std::pair<std::string, Params>> points{{"config", p}};
    ParamSampler sampler(cfg_.seed);
    for (const Params& s : sampler.take(cfg_.samples)) points.emplace_back("sample", s);

    bool all = true;
    auto report = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "identity,source,alpha,beta,c,residual_zero,skipped,detail\n";
    for (const auto& [source, q] : points) {
      for (const CheckResult& r : run_identity_suite(q, cfg_.nmax)) {
        all = all && r.passed;
        nlohmann::ordered_json j;
        j["identity"] = r.identity;
        j["params"] = params_json(q);
        j["residual_zero"] = r.passed && !r.skipped;
        j["skipped"] = r.skipped;
        j["source"] = source;
        j["seed"] = cfg_.seed;
        if (!r.detail.empty()) j["detail"] = r.detail;
        report.push_back(std::move(j));
        csv << r.identity << ',' << source << ',' << to_string(q.alpha) << ',' << to_string(q.beta) << ','
            << to_string(q.c) << ',' << (r.passed && !r.skipped) << ',' << r.skipped << ",\"" << r.detail << "\"\n";
      }
    }
    emit(cfg_.format == "csv" ? csv.str() : report.dump(2) + "\n");
    return all ? kOk : kCheckFailed;
  }

  int cmd_ladder() {
    const Params p = parse_params(cfg_);
    validate_family(p, cfg_.nmax);
    const FamilyContext ctx(p, cfg_.nmax);
    std::vector<LadderReport> reports;
    auto attempt = [&](auto&& make) {
      try {
        reports.push_back(make());
      } catch (const DegenerateParams& e) {
        err_ << "skipped: " << e.what() << "\n";
      }
    };
    for (unsigned n = 1; n <= cfg_.nmax; ++n)
      attempt([&] { return hahn_check(n, ctx.lowering(), ctx.family(), ctx.family_alpha_plus_2()); });
    for (unsigned n = 0; n <= cfg_.nmax; ++n)
      attempt([&] { return raising_check(n, ctx.raising(), ctx.family(), ctx.family_alpha_minus_2()); });

    bool all = true;
    auto arr = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "n,shift,predicted_constant,observed_constant,exact_match\n";
    for (const auto& r : reports) {
      all = all && r.exact_match;
      arr.push_back({{"n", r.n},
                     {"shift", r.shift},
                     {"predicted_constant", to_string(r.predicted_constant)},
                     {"observed_constant", r.proportional ? nlohmann::ordered_json(to_string(r.observed_constant))
                                                          : nlohmann::ordered_json()},
                     {"exact_match", r.exact_match}});
      csv << r.n << ',' << r.shift << ',' << to_string(r.predicted_constant) << ','
          << (r.proportional ? to_string(r.observed_constant) : "") << ',' << r.exact_match << '\n';
    }
    emit(cfg_.format == "csv" ? csv.str() : arr.dump(2) + "\n");
    return all ? kOk : kCheckFailed;
  }

  int cmd_christoffel(const std::string& in_path, const std::vector<std::string>& node_text) {
    std::vector<Rational> nodes;
    for (const auto& t : node_text) {
      try {
        nodes.push_back(parse_rational(t));
      } catch (const ParseError& e) {
        throw UsageError(std::string("--node: ") + e.what());
      }
    }
    std::vector<Poly> seq;
    if (in_path.empty()) {
      const Params p = parse_params(cfg_);
      validate_family(p, cfg_.nmax + static_cast<unsigned>(nodes.size()));
      seq = MonicPolySeq(p).prefix(cfg_.nmax + static_cast<unsigned>(nodes.size()));
    } else {
      seq = read_sequence(in_path);
    }
    if (seq.size() <= nodes.size()) throw UsageError("sequence too short for the number of nodes");
    std::vector<Poly> out;
    try {
      out = christoffel(seq, nodes);
    } catch (const ZeroAtNode& e) {
      throw UsageError(std::string("ZeroAtNode: ") + e.what());
    }
    std::vector<SeqRow> rows;
    for (unsigned n = 0; n < out.size(); ++n) {
      SeqRow r{n, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, out[n]};
      if (n + 1 < out.size()) {
        const Recurrence rec = fitted_recurrence(out, n);
        r.b = rec.b;
        if (n > 0) r.u = rec.u;
      }
      rows.push_back(std::move(r));
    }
    return emit(emit_rows(rows, cfg_.format, false));
  }

  int cmd_quad(unsigned N, int digits) {
    const Params p = parse_params(cfg_);
    if (!p.in_positivity_window()) throw UsageError("quad needs alpha > -1, beta > -1, 0 < c < 1");
    double mass;
    try {
      mass = exact_moment(0, p).get_d();
    } catch (const NotPolynomialRegime&) {
      mass = numeric_mass(to_real(p));
    }
    const QuadRule rule = gauss_rule(N, p, mass);
    std::ostringstream os;
    if (cfg_.format == "csv") {
      os << "node,weight\n";
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        os << fixed_digits(rule.nodes[i], digits) << ',' << fixed_digits(rule.weights[i], digits) << '\n';
    } else {
      auto list = [&](const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fixed_digits(v[i], digits);
        return s + "]";
      };
      os << "{\"nodes\": " << list(rule.nodes) << ", \"weights\": " << list(rule.weights)
         << ", \"mass\": " << fixed_digits(mass, digits) << "}\n";
    }
    return emit(os.str());
  }

  std::ostream& out_;
  std::ostream& err_;
  CliConfig cfg_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return App(out, err).run(argc, argv);
}

}  // namespace bigm1::cli

#endif  // BIGM1_TOOLS_CLI_HPP
