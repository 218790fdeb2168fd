#include <doctest.h>

#include <random>

#include "kohn/errors.hpp"
#include "kohn/json_io.hpp"

using namespace kohn;

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = random_polynomial(2 + trial % 4, 5, 6, rng);
    const std::string text = polynomial_to_json(f).dump();
    CHECK(polynomial_from_json_text(text) == f);
    CHECK(polynomial_to_json(polynomial_from_json_text(text)).dump() == text);
  }
}

TEST_CASE("polynomial JSON format") {
  const Polynomial f = Polynomial::z(2, 0);
  CHECK(polynomial_to_json(f).dump() == R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":"1/1","im":"0/1"}]})");
  const auto g = polynomial_from_json_text(R"({"n":2,"terms":[{"alpha":[0,1],"beta":[0,0],"re":"2/4"}]})");
  CHECK(g == Polynomial::z(2, 1) * Polynomial::constant(2, Rational(1, 2)));
  const auto merged = polynomial_from_json_text(
      R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":"1/1"},{"alpha":[1,0],"beta":[0,0],"re":"-1/1"}]})");
  CHECK(merged.is_zero());
}

TEST_CASE("malformed polynomial JSON names the offending term") {
  auto message = [](const char* text) {
    try {
      polynomial_from_json_text(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{") .find("invalid JSON") != std::string::npos);
  CHECK(message(R"({"terms":[]})").find("'n'") != std::string::npos);
  CHECK(message(R"({"n":1,"terms":[]})").find("n must be") != std::string::npos);
  CHECK(message(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":"1/1"},{"alpha":[1],"beta":[0,0],"re":"1/1"}]})")
            .find("terms[1].alpha") != std::string::npos);
  CHECK(message(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,-1],"re":"1/1"}]})").find("terms[0].beta") !=
        std::string::npos);
  CHECK(message(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":"1/0"}]})").find("terms[0].re") !=
        std::string::npos);
  CHECK(message(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0],"re":0.5}]})").find("terms[0].re") !=
        std::string::npos);
  CHECK(message(R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,0]}]})").find("terms[0]") != std::string::npos);
}

TEST_CASE("spectrum CSV and JSON") {
  const auto agg = aggregate_spectrum(2, Rational(4));
  CHECK(aggregated_spectrum_csv(agg) ==
        "eigenvalue_num,eigenvalue_den,multiplicity,contributors\n2,1,2,0:1\n4,1,6,1:1;0:2\n");
  const auto rows = spectrum_entries(2, Rational(4));
  CHECK(spectrum_entries_csv(rows) == "p,q,eigenvalue_num,eigenvalue_den,multiplicity\n0,1,2,1,2\n1,1,4,1,3\n0,2,4,1,3\n");
  const Json j = aggregated_spectrum_to_json(agg);
  CHECK(j["entries"][1]["eigenvalue"] == "4/1");
  CHECK(j["entries"][1]["multiplicity"] == "6");
}

TEST_CASE("report serializers keep exact values as strings") {
  const Json bc = best_constant_to_json(best_constant(3, minimum_scan(3)));
  CHECK(bc["c_squared"] == "3/8");
  CHECK(bc["argmax_k"] == 1);
  CHECK(bc["matches_theorem_display"] == false);
  CHECK(bc["c_squared_float"].is_number_float());
  const Json sr = schatten_report_to_json(schatten_report(2, Rational(3), 1, 1));
  CHECK(sr["partial_sum"] == "19/64");
  CHECK(sr["verdict"] == "Converges");
  const Json div = schatten_report_to_json(schatten_report(2, Rational(2), 5, 5));
  CHECK(div["tail_upper_float"].is_null());
  CHECK(div["verdict"] == "Diverges");
  const Json dec = decomposition_to_json(decompose(Polynomial::z(2, 0) * Polynomial::zbar(2, 0)));
  CHECK(dec["components"].size() == 2);
  CHECK(dec["components"][0]["squared_norm"] == "1/4");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("serialization is deterministic") {
  std::mt19937_64 a(5), b(5);
  const Polynomial f = random_polynomial(3, 5, 8, a);
  const Polynomial g = random_polynomial(3, 5, 8, b);
  CHECK(decomposition_to_json(apply_green(f)).dump() == decomposition_to_json(apply_green(g)).dump());
}
