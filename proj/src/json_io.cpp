#include "kohn/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

Json float_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json bidegree_to_json(const Bidegree& d) { return Json::array({d.p, d.q}); }

Multiindex multiindex_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of nonnegative integers");
  if (static_cast<int>(j.size()) != n) {
    throw ParseError(where + ": length " + std::to_string(j.size()) + " does not match n=" + std::to_string(n));
  }
  std::vector<int> entries;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long long>() < 0) throw ParseError(where + ": entries must be nonnegative integers");
    entries.push_back(e.get<int>());
  }
  return Multiindex(std::move(entries));
}

Rational rational_field(const Json& term, const char* key, const std::string& where) {
  if (!term.contains(key)) return 0;
  const auto& v = term.at(key);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"alpha", m.alpha.entries()},
                     {"beta", m.beta.entries()},
                     {"re", to_string(c.re())},
                     {"im", to_string(c.im())}});
  }
  return {{"n", f.n()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial: expected a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParseError("polynomial: missing integer field 'n'");
  const int n = j.at("n").get<int>();
  if (n < 2) throw ParseError("polynomial: n must be >= 2, got " + std::to_string(n));
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("polynomial: missing array field 'terms'");
  Polynomial out(n);
  std::size_t index = 0;
  for (const auto& term : j.at("terms")) {
    const std::string where = "terms[" + std::to_string(index++) + "]";
    if (!term.is_object()) throw ParseError(where + ": expected an object");
    if (!term.contains("alpha") || !term.contains("beta")) throw ParseError(where + ": missing 'alpha' or 'beta'");
    if (!term.contains("re") && !term.contains("im")) throw ParseError(where + ": missing coefficient 're'/'im'");
    Multiindex alpha = multiindex_from_json(term.at("alpha"), n, where + ".alpha");
    Multiindex beta = multiindex_from_json(term.at("beta"), n, where + ".beta");
    ExactScalar c(rational_field(term, "re", where), rational_field(term, "im", where));
    out.add_term({std::move(alpha), std::move(beta)}, c);
  }
  return out;
}

Polynomial polynomial_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial: invalid JSON: ") + e.what());
  }
  return polynomial_from_json(j);
}

Json decomposition_to_json(const SphericalDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    comps.push_back({{"p", c.bidegree.p},
                     {"q", c.bidegree.q},
                     {"polynomial", polynomial_to_json(c.part)},
                     {"squared_norm", to_string(sphere_norm_squared(c.part))}});
  }
  return {{"n", d.n}, {"components", std::move(comps)}};
}

Json sobolev_power_to_json(const SobolevPowerResult& result, const Rational& t) {
  Json out = decomposition_to_json(result.decomposition);
  out["t"] = to_string(t);
  out["exact"] = result.exact;
  if (!result.exact) {
    for (std::size_t i = 0; i < result.float_factors.size(); ++i) {
      out["components"][i]["factor_float"] = result.float_factors[i];
    }
  }
  return out;
}

Json aggregated_spectrum_to_json(const AggregatedSpectrum& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json contributors = Json::array();
    for (const auto& d : e.contributors) contributors.push_back(bidegree_to_json(d));
    entries.push_back({{"eigenvalue", to_string(e.eigenvalue)},
                       {"multiplicity", e.multiplicity.get_str()},
                       {"contributors", std::move(contributors)}});
  }
  return {{"n", s.n}, {"cutoff", to_string(s.cutoff)}, {"entries", std::move(entries)}};
}

Json schatten_report_to_json(const SchattenReport& rep) {
  Json out = {{"n", rep.n},
              {"r", to_string(rep.r)},
              {"r_float", to_double(rep.r)},
              {"cutoff_p", rep.cutoff_p},
              {"cutoff_q", rep.cutoff_q}};
  out["partial_sum"] = rep.partial_sum.exact ? Json(to_string(*rep.partial_sum.exact)) : Json(nullptr);
  out["partial_sum_float"] = rep.partial_sum.approx;
  out["tail_upper_float"] = float_or_null(rep.tail_upper);
  out["tail_lower_float"] = float_or_null(rep.tail_lower);
  out["bracket_upper_float"] = float_or_null(rep.partial_sum.approx + rep.tail_upper);
  out["verdict"] = to_string(rep.verdict);
  out["approx_value_float"] = rep.approx_value ? Json(*rep.approx_value) : Json(nullptr);
  return out;
}

Json best_constant_to_json(const BestConstantReport& rep) {
  Json eq = Json::array();
  for (const auto& d : rep.equality_bidegrees) eq.push_back(bidegree_to_json(d));
  return {{"n", rep.n},
          {"scan_max", rep.scan_max},
          {"c_squared", to_string(rep.c_squared)},
          {"c_squared_float", to_double(rep.c_squared)},
          {"c_float", std::sqrt(to_double(rep.c_squared))},
          {"argmax_k", rep.argmax_k},
          {"equality_bidegrees", std::move(eq)},
          {"matches_theorem_display", rep.matches_theorem_display},
          {"matches_proof_display", rep.matches_proof_display},
          {"decreasing_from_k", rep.decreasing_from_k},
          {"tail_certified", rep.tail_certified}};
}

Json verification_report_to_json(const EigenVerificationReport& rep) {
  Json cells = Json::array();
  for (const auto& c : rep.cells) {
    cells.push_back({{"p", c.bidegree.p},
                     {"q", c.bidegree.q},
                     {"status", c.passed() ? "pass" : "fail"},
                     {"monomial_dimension", c.monomial_dimension},
                     {"kernel_rank", c.kernel_rank},
                     {"image_rank", c.image_rank},
                     {"expected_dimension", c.expected_dimension.get_str()},
                     {"boxb_eigenvalue", to_string(c.boxb_eigenvalue)},
                     {"laplace_beltrami_eigenvalue", to_string(c.laplace_beltrami_eigenvalue)},
                     {"counterexamples", c.failures}});
  }
  Json degrees = Json::array();
  for (const auto& d : rep.degrees) {
    degrees.push_back({{"k", d.k},
                       {"summed_dimension", d.summed_dimension.get_str()},
                       {"expected_dimension", d.expected_dimension.get_str()},
                       {"status", d.ok ? "pass" : "fail"}});
  }
  return {{"n", rep.n},
          {"max_degree", rep.max_degree},
          {"passed", rep.passed()},
          {"cells", std::move(cells)},
          {"degrees", std::move(degrees)},
          {"orthogonality_pairs", rep.orthogonality_pairs},
          {"orthogonality_counterexamples", rep.orthogonality_failures}};
}

Json gain_certificate_to_json(const GainCertificate& cert) {
  return {{"n", cert.n},
          {"s", cert.s},
          {"lhs", to_string(cert.lhs)},
          {"rhs", to_string(cert.rhs)},
          {"c_squared", to_string(cert.c_squared)},
          {"holds", cert.holds},
          {"equality", cert.equality},
          {"in_equality_eigenspace", cert.in_equality_eigenspace},
          {"ratio", cert.ratio ? Json(to_string(*cert.ratio)) : Json(nullptr)}};
}

std::string aggregated_spectrum_csv(const AggregatedSpectrum& s) {
  std::ostringstream os;
  os << "eigenvalue_num,eigenvalue_den,multiplicity,contributors\n";
  for (const auto& e : s.entries) {
    os << e.eigenvalue.get_num().get_str() << ',' << e.eigenvalue.get_den().get_str() << ','
       << e.multiplicity.get_str() << ',';
    for (std::size_t i = 0; i < e.contributors.size(); ++i) {
      if (i) os << ';';
      os << e.contributors[i].p << ':' << e.contributors[i].q;
    }
    os << '\n';
  }
  return os.str();
}

std::string spectrum_entries_csv(const std::vector<SpectrumEntry>& entries) {
  std::ostringstream os;
  os << "p,q,eigenvalue_num,eigenvalue_den,multiplicity\n";
  for (const auto& e : entries) {
    os << e.bidegree.p << ',' << e.bidegree.q << ',' << e.eigenvalue.get_num().get_str() << ','
       << e.eigenvalue.get_den().get_str() << ',' << e.multiplicity.get_str() << '\n';
  }
  return os.str();
}

std::string plot_series_csv(const std::vector<PlotPoint>& points) {
  std::ostringstream os;
  os << "cutoff,partial_sum_float,tail_upper_float\n";
  for (const auto& p : points) os << p.cutoff << ',' << format_double(p.partial_sum) << ',' << format_double(p.tail_upper) << '\n';
  return os.str();
}

}  // namespace kohn
