#include "szf/json_io.hpp"

#include <nlohmann/json.hpp>

namespace szf {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const std::string& key) {
    if (!doc.is_object()) throw SchemaError("", "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError("/" + key, "missing field");
    return *it;
}

const json& require_array(const json& doc, const std::string& key) {
    const json& v = require_field(doc, key);
    if (!v.is_array()) throw SchemaError("/" + key, "expected an array");
    return v;
}

BigInt decimal_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a decimal integer string");
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw SchemaError(path, "expected a decimal integer string");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw SchemaError(path, "expected a decimal integer string");
    return BigInt(s);
}

long integer_in_range(const json& v, const std::string& path, long min) {
    if (!v.is_number_integer() || v.is_number_float())
        throw SchemaError(path, "expected an integer");
    long x = v.get<long>();
    if (x < min) throw SchemaError(path, "integer below " + std::to_string(min));
    return x;
}

std::vector<BigInt> decimal_strings(const json& arr, const std::string& key) {
    std::vector<BigInt> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(decimal_string(arr[i], "/" + key + "/" + std::to_string(i)));
    return out;
}

json bigints_to_strings(const std::vector<BigInt>& v) {
    json arr = json::array();
    for (const BigInt& c : v) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

json zeta_to_json(const RationalSeries& f) {
    return {{"numerator", bigints_to_strings(f.numerator.coeffs())},
            {"denominator", f.denominator.factors()}};
}

RationalSeries zeta_from_json(const json& doc) {
    std::vector<BigInt> num = decimal_strings(require_array(doc, "numerator"), "numerator");
    const json& den = require_array(doc, "denominator");
    std::vector<long> factors;
    factors.reserve(den.size());
    for (std::size_t i = 0; i < den.size(); ++i)
        factors.push_back(integer_in_range(den[i], "/denominator/" + std::to_string(i), 1));
    return {IntPoly(std::move(num)), LinearFactorProduct(std::move(factors))};
}

json monomial_to_json(const MonomialIdeal2D& ideal) {
    json gens = json::array();
    for (auto g : ideal.generators()) gens.push_back(json::array({g.a, g.b}));
    return {{"vars", 2}, {"generators", gens}};
}

MonomialIdeal2D monomial_from_json(const json& doc) {
    if (integer_in_range(require_field(doc, "vars"), "/vars", 2) != 2)
        throw SchemaError("/vars", "only 2-variable monomial ideals are supported");
    const json& gens = require_array(doc, "generators");
    std::vector<ExponentVector> vectors;
    vectors.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string path = "/generators/" + std::to_string(i);
        if (!gens[i].is_array() || gens[i].size() != 2)
            throw SchemaError(path, "expected a pair [a, b]");
        vectors.push_back({integer_in_range(gens[i][0], path + "/0", 0),
                           integer_in_range(gens[i][1], path + "/1", 0)});
    }
    return MonomialIdeal2D(std::move(vectors));
}

json segre_to_json(const SegreClassData& data) {
    return {{"ambient_dim", data.ambient_dim}, {"coefficients", bigints_to_strings(data.coeffs)}};
}

SegreClassData segre_from_json(const json& doc) {
    long n = integer_in_range(require_field(doc, "ambient_dim"), "/ambient_dim", 0);
    return SegreClassData(n, decimal_strings(require_array(doc, "coefficients"), "coefficients"));
}

}  // namespace szf
