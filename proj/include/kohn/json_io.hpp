// Wire formats: polynomial JSON, report JSON, and CSV tables. Exact values
// are "num/den" strings; float fields carry a `_float` suffix.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "kohn/harmonic.hpp"
#include "kohn/operators.hpp"
#include "kohn/polynomial.hpp"
#include "kohn/schatten.hpp"
#include "kohn/sobolev.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

using Json = nlohmann::ordered_json;

/// {"n": 2, "terms": [{"alpha": [1,0], "beta": [0,0], "re": "1/1", "im": "0/1"}, ...]}
Json polynomial_to_json(const Polynomial& f);
/// Throws ParseError naming the offending field or term index.
Polynomial polynomial_from_json(const Json& j);
Polynomial polynomial_from_json_text(const std::string& text);

Json rational_to_json(const Rational& r);

Json decomposition_to_json(const SphericalDecomposition& d);
Json sobolev_power_to_json(const SobolevPowerResult& result, const Rational& t);
Json aggregated_spectrum_to_json(const AggregatedSpectrum& s);
Json schatten_report_to_json(const SchattenReport& rep);
Json best_constant_to_json(const BestConstantReport& rep);
Json verification_report_to_json(const EigenVerificationReport& rep);
Json gain_certificate_to_json(const GainCertificate& cert);

/// eigenvalue_num,eigenvalue_den,multiplicity,contributors
std::string aggregated_spectrum_csv(const AggregatedSpectrum& s);
/// p,q,eigenvalue_num,eigenvalue_den,multiplicity
std::string spectrum_entries_csv(const std::vector<SpectrumEntry>& entries);
/// cutoff,partial_sum_float,tail_upper_float
std::string plot_series_csv(const std::vector<PlotPoint>& points);

/// Shortest round-trip decimal form of a double ("inf" for infinities).
std::string format_double(double x);

}  // namespace kohn
