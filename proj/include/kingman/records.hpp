#pragma once

#include <string>

#include "json.hpp"

#include "kingman/zeta_polynomial.hpp"

namespace kingman {

enum class Form { Zeta, Pi, Numeric, All };

// One reportable quantity: its exact polynomial plus the derived pi-form and
// numeric renderings. `numeric` is always eval_numeric(exact, digits), so the
// three columns can never drift apart.
struct OutputRecord {
    std::string name;
    long long index = 0;
    ZetaPolynomial exact;
    int digits = 5;
    std::string pi_str;
    std::string numeric;
};

OutputRecord make_record(std::string name, long long index, const ZetaPolynomial& exact,
                         int digits);

nlohmann::json record_to_json(const OutputRecord& r);

// Header row for CSV output; fields carry no commas by construction.
std::string record_csv_header();
std::string record_to_csv_row(const OutputRecord& r);

// Text rendering of the requested column(s).
std::string record_to_text(const OutputRecord& r, Form form);

}  // namespace kingman
