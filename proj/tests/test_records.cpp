#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "kingman/absorption.hpp"
#include "kingman/gumbel.hpp"
#include "kingman/records.hpp"
#include "kingman/serialization.hpp"
#include "kingman/zeta_values.hpp"

using namespace kingman;

namespace {

std::vector<ZetaPolynomial> battery() {
    std::vector<ZetaPolynomial> v;
    for (int j = 1; j <= 5; ++j) v.push_back(cumulant_T(j));
    for (int j = 1; j <= 5; ++j) v.push_back(moment_T(j));
    for (int n = 0; n <= 10; ++n) v.push_back(gumbel_central_moment(n));
    for (int n = 1; n <= 6; ++n) v.push_back(gumbel_moment(n));
    v.push_back(ZetaPolynomial(0));
    v.push_back(ZetaPolynomial(Rational(-7, 3)));
    v.push_back(zp_log2() * Rational(3, 7) + zp_gamma().pow(2) -
                zp_zeta(3) * zp_log2().pow(2) * Rational(5));
    return v;
}

}  // namespace

TEST_CASE("derived fields are consistent with the exact polynomial") {
    for (const auto& p : battery()) {
        OutputRecord r = make_record("q", 1, p, 7);
        CHECK(r.digits == 7);
        CHECK(r.pi_str == to_pi_form(p).str());
        CHECK(r.numeric == eval_numeric(p, 7));
    }
}

TEST_CASE("json round-trip preserves the exact polynomial") {
    long long idx = 0;
    for (const auto& p : battery()) {
        OutputRecord r = make_record("quantity", ++idx, p, 5);
        nlohmann::json j = record_to_json(r);
        nlohmann::json reparsed = nlohmann::json::parse(j.dump());
        CHECK(polynomial_from_json(reparsed.at("exact")) == p);
        CHECK(reparsed.at("name").get<std::string>() == "quantity");
        CHECK(reparsed.at("index").get<long long>() == idx);
        CHECK(reparsed.at("digits").get<int>() == 5);
        CHECK(reparsed.at("pi").get<std::string>() == r.pi_str);
        CHECK(reparsed.at("numeric").get<std::string>() == r.numeric);
    }
}

TEST_CASE("csv rows match the header layout") {
    CHECK(record_csv_header() == "name,index,exact,pi,numeric");
    OutputRecord r = make_record("cumulant-t", 2, cumulant_T(2), 5);
    CHECK(record_to_csv_row(r) ==
          "cumulant-t,2,8\xCE\xB6(2)-12,4/3\xCF\x80^2-12,1.15947");
    // Numeric field count stays stable: no field introduces commas.
    for (const auto& p : battery()) {
        std::string row = record_to_csv_row(make_record("q", 0, p, 5));
        int commas = 0;
        for (char c : row) commas += (c == ',');
        CHECK(commas == 4);
    }
}

TEST_CASE("text rendering selects the requested columns") {
    OutputRecord r = make_record("cumulant-t", 2, cumulant_T(2), 5);
    CHECK(record_to_text(r, Form::Zeta) == "cumulant-t(2) = 8\xCE\xB6(2)-12");
    CHECK(record_to_text(r, Form::Pi) == "cumulant-t(2) = 4/3\xCF\x80^2-12");
    CHECK(record_to_text(r, Form::Numeric) == "cumulant-t(2) = 1.15947");
    CHECK(record_to_text(r, Form::All) ==
          "cumulant-t(2) = 8\xCE\xB6(2)-12 = 4/3\xCF\x80^2-12 = 1.15947");
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"bad":1})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        polynomial_from_json(nlohmann::json::parse(
            R"x({"terms":[{"coeff":"1/2","generators":["zeta(1)"]}]})x")),
        std::domain_error);
    CHECK_THROWS_AS(
        polynomial_from_json(nlohmann::json::parse(
            R"({"terms":[{"coeff":"1/2","generators":["theta"]}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        polynomial_from_json(nlohmann::json::parse(
            R"({"terms":[{"coeff":"x","generators":[]}]})")),
        std::invalid_argument);
}
