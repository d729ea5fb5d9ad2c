#include "kingman/records.hpp"

#include "kingman/serialization.hpp"
#include "kingman/zeta_values.hpp"

namespace kingman {

OutputRecord make_record(std::string name, long long index, const ZetaPolynomial& exact,
                         int digits) {
    OutputRecord r;
    r.name = std::move(name);
    r.index = index;
    r.exact = exact;
    r.digits = digits;
    r.pi_str = to_pi_form(exact).str();
    r.numeric = eval_numeric(exact, digits);
    return r;
}

nlohmann::json record_to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["index"] = r.index;
    j["digits"] = r.digits;
    j["exact"] = polynomial_to_json(r.exact);
    j["pi"] = r.pi_str;
    j["numeric"] = r.numeric;
    return j;
}

std::string record_csv_header() { return "name,index,exact,pi,numeric"; }

std::string record_to_csv_row(const OutputRecord& r) {
    return r.name + "," + std::to_string(r.index) + "," + r.exact.str() + "," + r.pi_str +
           "," + r.numeric;
}

std::string record_to_text(const OutputRecord& r, Form form) {
    std::string out = r.name + "(" + std::to_string(r.index) + ")";
    switch (form) {
        case Form::Zeta:
            out += " = " + r.exact.str();
            break;
        case Form::Pi:
            out += " = " + r.pi_str;
            break;
        case Form::Numeric:
            out += " = " + r.numeric;
            break;
        case Form::All:
            out += " = " + r.exact.str() + " = " + r.pi_str + " = " + r.numeric;
            break;
    }
    return out;
}

}  // namespace kingman
