#include "egyptian/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace egyptian {

namespace {

using nlohmann::json;

Rational rat_entry(const json& j, const char* where) {
    if (!j.is_string())
        throw validation_error(std::string(where) + " must be a rational string");
    const std::string s = j.get<std::string>();
    try {
        return rat_parse(s);
    } catch (const arithmetic_error&) {
        throw validation_error(std::string(where) + ": bad rational '" + s + "'");
    }
}

BigInt int_entry(const json& j, const char* where) {
    if (!j.is_string())
        throw validation_error(std::string(where) + " must be an integer string");
    const std::string s = j.get<std::string>();
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw validation_error(std::string(where) + ": bad integer '" + s + "'");
    }
}

DenominatorSet parse_descriptor(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw validation_error("denominator descriptor needs a \"kind\" string");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "naturals") return DenominatorSet::naturals();
    if (kind == "primes") return DenominatorSet::primes();
    if (kind == "arithmetic") {
        if (!j.contains("first") || !j.contains("step"))
            throw validation_error("arithmetic descriptor needs first and step");
        return DenominatorSet::arithmetic(rat_entry(j.at("first"), "first"),
                                          rat_entry(j.at("step"), "step"));
    }
    if (kind == "geometric") {
        if (!j.contains("first") || !j.contains("ratio"))
            throw validation_error("geometric descriptor needs first and ratio");
        return DenominatorSet::geometric(rat_entry(j.at("first"), "first"),
                                         rat_entry(j.at("ratio"), "ratio"));
    }
    if (kind == "polynomial") {
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            throw validation_error("polynomial descriptor needs a coeffs array");
        std::vector<BigInt> coeffs;
        for (const json& c : j.at("coeffs")) coeffs.push_back(int_entry(c, "coeffs"));
        return DenominatorSet::polynomial(std::move(coeffs));
    }
    if (kind == "with-prefix") {
        if (!j.contains("prefix") || !j.at("prefix").is_array() || !j.contains("tail"))
            throw validation_error("with-prefix descriptor needs prefix array and tail");
        std::vector<Rational> prefix;
        for (const json& e : j.at("prefix")) prefix.push_back(rat_entry(e, "prefix"));
        return DenominatorSet::with_prefix(std::move(prefix), parse_descriptor(j.at("tail")));
    }
    throw validation_error("unknown descriptor kind: " + kind);
}

json descriptor_json(const DenominatorSet& d) {
    json j;
    switch (d.kind()) {
        case DenominatorSet::Kind::Naturals: j["kind"] = "naturals"; break;
        case DenominatorSet::Kind::Primes: j["kind"] = "primes"; break;
        case DenominatorSet::Kind::Arithmetic:
            j["kind"] = "arithmetic";
            j["first"] = rat_format(d.first());
            j["step"] = rat_format(d.step());
            break;
        case DenominatorSet::Kind::Geometric:
            j["kind"] = "geometric";
            j["first"] = rat_format(d.first());
            j["ratio"] = rat_format(d.ratio());
            break;
        case DenominatorSet::Kind::Polynomial: {
            j["kind"] = "polynomial";
            json arr = json::array();
            for (const BigInt& c : d.coeffs()) arr.push_back(c.str());
            j["coeffs"] = std::move(arr);
            break;
        }
        case DenominatorSet::Kind::WithPrefix: {
            j["kind"] = "with-prefix";
            json arr = json::array();
            for (const Rational& e : d.prefix()) arr.push_back(rat_format(e));
            j["prefix"] = std::move(arr);
            j["tail"] = descriptor_json(d.tail());
            break;
        }
    }
    return j;
}

}  // namespace

Problem parse_problem_text(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("problem file is not valid JSON");
    if (!j.is_object()) throw validation_error("problem file must be a JSON object");
    if (!j.contains("version") || !j.at("version").is_number_integer() ||
        j.at("version").get<int>() != 1)
        throw validation_error("problem file version must be the integer 1");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw validation_error("problem file needs an integer n");
    const long long n = j.at("n").get<long long>();
    if (n < 1 || n > 64) throw validation_error("n must be between 1 and 64");
    if (!j.contains("numerators") || !j.at("numerators").is_array() ||
        static_cast<long long>(j.at("numerators").size()) != n)
        throw validation_error("numerators must be a list of n lists");
    if (!j.contains("denominators") || !j.at("denominators").is_array() ||
        static_cast<long long>(j.at("denominators").size()) != n)
        throw validation_error("denominators must be a list of n descriptors");

    std::vector<NumeratorSet> nums;
    for (const json& lst : j.at("numerators")) {
        if (!lst.is_array() || lst.empty())
            throw validation_error("each numerator entry must be a nonempty list");
        std::vector<Rational> vals;
        for (const json& e : lst) vals.push_back(rat_entry(e, "numerator"));
        nums.emplace_back(std::move(vals));
    }
    std::vector<DenominatorSet> dens;
    for (const json& d : j.at("denominators")) dens.push_back(parse_descriptor(d));
    return Problem(std::move(nums), std::move(dens));
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot read problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::string canonical_problem_text(const Problem& p) {
    json j;
    j["version"] = 1;
    j["n"] = p.n();
    json nums = json::array();
    for (std::size_t i = 0; i < p.n(); ++i) {
        json lst = json::array();
        for (const Rational& v : p.numerators(i).values()) lst.push_back(rat_format(v));
        nums.push_back(std::move(lst));
    }
    j["numerators"] = std::move(nums);
    json dens = json::array();
    for (std::size_t i = 0; i < p.n(); ++i) dens.push_back(descriptor_json(p.denominators(i)));
    j["denominators"] = std::move(dens);
    return j.dump();  // sorted keys, no whitespace: canonical
}

std::string problem_hash(const Problem& p) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canonical_problem_text(p)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace egyptian
