#include "cuecorr/json_io.hpp"

namespace cuecorr {

json emit_rat(const Rat& q) { return rat_str(q); }

Rat parse_rat_json(const json& j) { return parse_rat(j.get<std::string>()); }

json emit_class_vector(const ClassVector& v) {
    json coeffs = json::array();
    for (const auto& [mu, c] : v.coeffs()) {
        json entry;
        entry["mu"] = mu.parts();
        entry["num"] = c.get_num().get_str();
        entry["den"] = c.get_den().get_str();
        coeffs.push_back(std::move(entry));
    }
    return json{{"n", v.degree()}, {"coeffs", std::move(coeffs)}};
}

ClassVector parse_class_vector(const json& j) {
    ClassVector out(j.at("n").get<int>());
    for (const auto& entry : j.at("coeffs")) {
        Partition mu(entry.at("mu").get<std::vector<int>>());
        Rat c = make_rat(Int(entry.at("num").get<std::string>()),
                         Int(entry.at("den").get<std::string>()));
        out.set(mu, c);
    }
    return out;
}

json emit_polynomial(const PolynomialQ& p, const std::string& var) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_str(c));
    return json{{"var", var}, {"coeffs", std::move(coeffs)}};
}

PolynomialQ parse_polynomial(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
    return PolynomialQ(std::move(coeffs));
}

json emit_rational_function(const RationalFunctionQ& f, const std::string& var) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num()) num.push_back(c.get_str());
    for (const auto& c : f.den()) den.push_back(c.get_str());
    return json{{"var", var}, {"num", std::move(num)}, {"den", std::move(den)}};
}

RationalFunctionQ parse_rational_function(const json& j) {
    auto load = [](const json& arr) {
        std::vector<Rat> coeffs;
        for (const auto& c : arr) coeffs.emplace_back(Int(c.get<std::string>()));
        return PolynomialQ(std::move(coeffs));
    };
    return RationalFunctionQ(load(j.at("num")), load(j.at("den")));
}

json emit_estimate_report(const EstimateReport& r) {
    json out{{"mean", {{"re", r.mean.real()}, {"im", r.mean.imag()}}},
             {"standard_error", r.standard_error},
             {"samples", r.samples}};
    if (r.has_target) {
        out["target"] = rat_str(r.target);
        out["z_score"] = r.z_score;
    }
    return out;
}

EstimateReport parse_estimate_report(const json& j) {
    EstimateReport r;
    r.mean = {j.at("mean").at("re").get<double>(), j.at("mean").at("im").get<double>()};
    r.standard_error = j.at("standard_error").get<double>();
    r.samples = j.at("samples").get<long>();
    if (j.contains("target")) {
        r.has_target = true;
        r.target = parse_rat(j.at("target").get<std::string>());
        r.z_score = j.at("z_score").get<double>();
    }
    return r;
}

}  // namespace cuecorr
