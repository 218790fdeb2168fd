// kohn-spectra: command-line front end for the Kohn Laplacian / complex
// Green operator toolkit on S^{2n-1}.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "kohn/errors.hpp"
#include "kohn/json_io.hpp"
#include "kohn/verify.hpp"

namespace {

using kohn::Json;

enum class Format { Json, Csv };

struct Common {
  int n = 2;
  std::string format = "json";
  std::string output;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format = "json") {
  c.format = default_format;
  cmd->add_option("--n", c.n, "Complex dimension n (sphere S^{2n-1}), n >= 2")->required();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output,-o", c.output, "Write to this file instead of stdout");
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + c.output + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

kohn::Rational rational_option(const std::string& text, const char* name) {
  try {
    return kohn::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

kohn::Polynomial read_polynomial(const std::string& path, int n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  kohn::Polynomial f = kohn::polynomial_from_json_text(buffer.str());
  if (f.n() != n) {
    throw UsageError("input polynomial has n=" + std::to_string(f.n()) + " but --n " + std::to_string(n) + " was given");
  }
  return f;
}

void require_json(const Common& c, const char* command) {
  if (c.format != "json") throw UsageError(std::string(command) + " supports only --format json");
}

int print_error(const char* kind, const std::string& message, int code) {
  Json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral theory of the Kohn Laplacian and complex Green operator on S^{2n-1}"};
  app.require_subcommand(1);

  Common spectrum_opts;
  std::string cutoff_text;
  bool by_bidegree = false;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and multiplicities of the Kohn Laplacian up to a cutoff");
  add_common(spectrum, spectrum_opts);
  spectrum->add_option("--cutoff", cutoff_text, "Largest eigenvalue to list (rational)")->required();
  spectrum->add_flag("--by-bidegree", by_bidegree, "One row per bidegree (p,q) instead of per distinct eigenvalue");

  Common apply_opts;
  std::string apply_input;
  std::string apply_op = "decompose";
  std::string t_text = "1";
  auto* apply = app.add_subcommand("apply", "Apply a spectral operator to a polynomial");
  add_common(apply, apply_opts);
  apply->add_option("--input,-i", apply_input, "Polynomial JSON file")->required();
  apply->add_option("--op", apply_op, "Operator")
      ->check(CLI::IsMember({"decompose", "boxb", "green", "hardy", "sobolev-power"}));
  apply->add_option("--t", t_text, "Exponent t for (I + Delta_S)^t (rational)");

  Common green_opts;
  std::string green_input;
  auto* green = app.add_subcommand("green-solve", "Canonical solution u = G f of boxb u = f - (Hardy part of f)");
  add_common(green, green_opts);
  green->add_option("--input,-i", green_input, "Polynomial JSON file")->required();

  Common schatten_opts;
  std::string r_text;
  long cutoff_p = 100;
  long cutoff_q = 100;
  long exact_limit = 40000;
  std::string plot_path;
  auto* schatten = app.add_subcommand("schatten", "Certified partial sums of the Schatten r-norm of G");
  add_common(schatten, schatten_opts);
  schatten->add_option("--r", r_text, "Schatten exponent r >= 1 (rational)")->required();
  schatten->add_option("--P", cutoff_p, "Cutoff in p (0 <= p <= P)");
  schatten->add_option("--Q", cutoff_q, "Cutoff in q (1 <= q <= Q)");
  schatten->add_option("--exact-limit", exact_limit, "Largest (P+1)*Q summed exactly for integer r");
  schatten->add_option("--emit-plot", plot_path, "Write (cutoff, partial_sum) CSV series here");

  Common approx_opts;
  double approx_r = 0.0;
  auto* approx = app.add_subcommand("schatten-approx", "Closed-form approximation of ||G||_r^r");
  add_common(approx, approx_opts);
  approx->add_option("--r", approx_r, "Exponent r > n")->required();

  Common sobolev_opts;
  long scan_max = 0;
  auto* sobolev = app.add_subcommand("sobolev-constant", "Best constant in ||Gf||_{s+1} <= C ||f||_s");
  add_common(sobolev, sobolev_opts);
  sobolev->add_option("--scan-max", scan_max, "Largest k scanned (default: the minimum admissible)");

  Common ratio_opts;
  std::string s_text = "1";
  long k_max = 20;
  auto* ratio = app.add_subcommand("ratio", "The ratio sequence (1+mu(k))^s / lambda_min(k)^2");
  add_common(ratio, ratio_opts, "csv");
  ratio->add_option("--s", s_text, "Sobolev exponent s (rational)");
  ratio->add_option("--k-max", k_max, "Largest k");

  Common verify_opts;
  kohn::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the brute-force oracle suite");
  add_common(verify, verify_opts);
  verify->add_option("--max-degree", vo.max_degree, "Largest p+q checked");
  verify->add_option("--seed", vo.seed, "Seed for random polynomials");
  verify->add_option("--samples", vo.samples, "Number of random polynomials");
  verify->add_option("--grid", vo.sandwich_grid, "p, q range for the Schatten termwise check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return print_error("usage", e.what(), 2);
  }

  try {
    if (*spectrum) {
      const auto cutoff = rational_option(cutoff_text, "cutoff");
      if (by_bidegree) {
        const auto rows = kohn::spectrum_entries(spectrum_opts.n, cutoff);
        if (spectrum_opts.format == "csv") {
          emit(spectrum_opts, kohn::spectrum_entries_csv(rows));
        } else {
          Json arr = Json::array();
          for (const auto& e : rows) {
            arr.push_back({{"p", e.bidegree.p},
                           {"q", e.bidegree.q},
                           {"eigenvalue", kohn::to_string(e.eigenvalue)},
                           {"multiplicity", e.multiplicity.get_str()}});
          }
          emit(spectrum_opts, dump({{"n", spectrum_opts.n}, {"cutoff", kohn::to_string(cutoff)}, {"rows", arr}}));
        }
      } else {
        const auto agg = kohn::aggregate_spectrum(spectrum_opts.n, cutoff);
        emit(spectrum_opts, spectrum_opts.format == "csv" ? kohn::aggregated_spectrum_csv(agg)
                                                          : dump(kohn::aggregated_spectrum_to_json(agg)));
      }
    } else if (*apply) {
      require_json(apply_opts, "apply");
      const auto f = read_polynomial(apply_input, apply_opts.n);
      Json out;
      if (apply_op == "decompose") {
        out = kohn::decomposition_to_json(kohn::decompose(f));
      } else if (apply_op == "boxb") {
        out = kohn::decomposition_to_json(kohn::apply_boxb(f));
      } else if (apply_op == "green") {
        out = kohn::decomposition_to_json(kohn::apply_green(f));
      } else if (apply_op == "hardy") {
        out = kohn::decomposition_to_json(kohn::hardy_projection(f));
      } else {
        const auto t = rational_option(t_text, "t");
        out = kohn::sobolev_power_to_json(kohn::apply_sobolev_power(f, t), t);
      }
      out["operator"] = apply_op;
      emit(apply_opts, dump(out));
    } else if (*green) {
      require_json(green_opts, "green-solve");
      const auto f = read_polynomial(green_input, green_opts.n);
      const auto dec = kohn::decompose(f);
      const auto solution = kohn::apply_green(dec);
      Json out = {{"n", green_opts.n},
                  {"solution", kohn::polynomial_to_json(solution.sum())},
                  {"solution_components", kohn::decomposition_to_json(solution)["components"]},
                  {"hardy_component", kohn::polynomial_to_json(kohn::hardy_projection(dec).sum())},
                  {"solution_squared_norm", kohn::to_string(kohn::sphere_norm_squared(solution.sum()))},
                  {"residual", kohn::to_string(kohn::residual_check(f))}};
      emit(green_opts, dump(out));
    } else if (*schatten) {
      require_json(schatten_opts, "schatten");
      const auto r = rational_option(r_text, "r");
      const auto rep = kohn::schatten_report(schatten_opts.n, r, cutoff_p, cutoff_q, exact_limit);
      if (!plot_path.empty()) {
        std::ofstream plot(plot_path, std::ios::binary);
        if (!plot) throw UsageError("cannot open plot file '" + plot_path + "'");
        plot << kohn::plot_series_csv(kohn::partial_sum_series(schatten_opts.n, r, std::max(cutoff_p, cutoff_q)));
      }
      emit(schatten_opts, dump(kohn::schatten_report_to_json(rep)));
    } else if (*approx) {
      require_json(approx_opts, "schatten-approx");
      const int n = approx_opts.n;
      Json out = {{"n", n},
                  {"r_float", approx_r},
                  {"approx_float", kohn::approx_formula(n, approx_r)},
                  {"dominant_term_float", n / std::pow(2.0 * n - 2.0, approx_r)},
                  {"pole_residue_float", kohn::approx_pole_residue(n)}};
      emit(approx_opts, dump(out));
    } else if (*sobolev) {
      require_json(sobolev_opts, "sobolev-constant");
      const long scan = scan_max > 0 ? scan_max : kohn::minimum_scan(sobolev_opts.n);
      Json out = kohn::best_constant_to_json(kohn::best_constant(sobolev_opts.n, scan));
      out["theorem_display_c_squared"] = kohn::to_string(kohn::theorem_display_constant(sobolev_opts.n));
      out["proof_display_c_squared"] = kohn::to_string(kohn::proof_display_constant(sobolev_opts.n));
      emit(sobolev_opts, dump(out));
    } else if (*ratio) {
      const auto s = rational_option(s_text, "s");
      if (k_max < 1) throw UsageError("--k-max must be >= 1");
      const bool exact = kohn::is_integer(s);
      if (ratio_opts.format == "csv") {
        std::ostringstream os;
        os << (exact ? "k,value,value_float\n" : "k,value_float\n");
        for (long k = 1; k <= k_max; ++k) {
          const auto v = kohn::sobolev_ratio(ratio_opts.n, s, k);
          os << k << ',';
          if (exact) os << kohn::to_string(*v.exact) << ',';
          os << kohn::format_double(v.approx) << '\n';
        }
        emit(ratio_opts, os.str());
      } else {
        Json arr = Json::array();
        for (long k = 1; k <= k_max; ++k) {
          const auto v = kohn::sobolev_ratio(ratio_opts.n, s, k);
          Json row = {{"k", k}};
          if (exact) row["value"] = kohn::to_string(*v.exact);
          row["value_float"] = v.approx;
          arr.push_back(std::move(row));
        }
        emit(ratio_opts, dump({{"n", ratio_opts.n}, {"s", kohn::to_string(s)}, {"bounded", kohn::is_bounded(ratio_opts.n, s)}, {"values", arr}}));
      }
    } else if (*verify) {
      require_json(verify_opts, "verify");
      vo.n = verify_opts.n;
      const auto outcome = kohn::run_verification(vo);
      emit(verify_opts, dump(outcome.report));
      return outcome.passed ? 0 : 1;
    }
  } catch (const kohn::ParseError& e) {
    return print_error("parse", e.what(), 3);
  } catch (const UsageError& e) {
    return print_error("usage", e.what(), 2);
  } catch (const kohn::DimensionError& e) {
    return print_error("dimension", e.what(), 2);
  } catch (const kohn::DomainError& e) {
    return print_error("domain", e.what(), 2);
  } catch (const std::exception& e) {
    return print_error("internal", e.what(), 4);
  }
  return 0;
}
