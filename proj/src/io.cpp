#include "dbent/io.hpp"

#include <algorithm>
#include <limits>

#include "dbent/error.hpp"

namespace dbent::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const json& field_of(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::uint64_t uint_of(const json& j, const char* key)
{
    const auto& v = field_of(j, key);
    if (!v.is_number_unsigned()) schema(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> uint_list(const json& j, const char* key)
{
    const auto& v = field_of(j, key);
    if (!v.is_array()) schema(std::string("\"") + key + "\" must be a list");
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
            schema(std::string("entries of \"") + key + "\" must be nonnegative integers");
        out.push_back(e.get<std::uint32_t>());
    }
    return out;
}

Field field_from(std::uint64_t p, std::uint64_t m, const json& j)
{
    if (p < 3 || p > 65535 || m == 0 || m > 64) schema("field descriptor out of range");
    if (j.contains("modulus")) {
        auto mod = uint_list(j, "modulus");
        if (mod.size() != m + 1) schema("modulus must have m + 1 coefficients");
        try {
            return Field(static_cast<std::uint32_t>(p), mod);
        } catch (const Error& e) {
            schema(std::string("invalid field: ") + e.what());
        }
    }
    try {
        return Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
    } catch (const Error& e) {
        schema(std::string("invalid field: ") + e.what());
    }
}

}  // namespace

json big(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

BigInt big_from(const json& j)
{
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto body = s.empty() || s[0] != '-' ? s : s.substr(1);
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
            schema("malformed integer string");
        return BigInt(s);
    }
    schema("expected an integer");
}

json to_json(const Field& F) { return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}}; }

Field field_from_json(const json& j) { return field_from(uint_of(j, "p"), uint_of(j, "m"), j); }

json to_json(const Space& V)
{
    json out = json::array();
    for (const auto& F : V.factors()) out.push_back(to_json(F));
    return out;
}

Space space_from_json(const json& j)
{
    if (!j.is_array() || j.empty()) schema("\"space\" must be a nonempty list of field descriptors");
    std::vector<Field> fs;
    for (const auto& e : j) fs.push_back(field_from_json(e));
    try {
        return Space(fs);
    } catch (const Error& e) {
        schema(std::string("invalid space: ") + e.what());
    }
}

json to_json(const VectorialFunction& F)
{
    const Field& K = F.codomain;
    return json{{"space", to_json(F.domain)},
                {"codomain", json{{"p", K.p()}, {"s", K.m()}, {"modulus", K.modulus()}}},
                {"table", F.table}};
}

VectorialFunction function_from_json(const json& j)
{
    const Space V = space_from_json(field_of(j, "space"));
    const auto& cj = field_of(j, "codomain");
    const Field K = field_from(uint_of(cj, "p"), uint_of(cj, "s"), cj);
    if (K.p() != V.p()) schema("codomain characteristic differs from the space");
    auto table = uint_list(j, "table");
    if (table.size() != V.size()) schema("table length must equal the size of the space");
    for (auto y : table)
        if (y >= K.size()) schema("table entry outside the codomain");
    return VectorialFunction(V, K, std::move(table));
}

json to_json(const CyclotomicInt& z)
{
    json coeffs = json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(big(c));
    return json{{"p", z.p()}, {"coeffs", coeffs}};
}

CyclotomicInt cyclo_from_json(const json& j)
{
    const auto p = uint_of(j, "p");
    const auto& cj = field_of(j, "coeffs");
    if (!cj.is_array() || cj.size() != p - 1) schema("\"coeffs\" must have p - 1 entries");
    std::vector<BigInt> c;
    for (const auto& e : cj) c.push_back(big_from(e));
    return CyclotomicInt(static_cast<std::uint32_t>(p), c);
}

json to_json(const WalshSpectrum& w)
{
    json out = json::array();
    for (std::uint64_t a = 0; a < w.size(); ++a) out.push_back(to_json(w.value(a)));
    return out;
}

json to_json(const BentClassification& c)
{
    json out{{"is_bent", c.is_bent}, {"weakly_regular", c.weakly_regular}, {"regular", c.regular}};
    out["epsilon"] = c.weakly_regular ? json(c.epsilon) : json(nullptr);
    out["dual"] = c.dual ? json(c.dual->table) : json(nullptr);
    return out;
}

json to_json(const DualBentCertificate& c)
{
    return json{{"dual", to_json(c.dual)}, {"sigma", c.sigma}, {"epsilons", c.epsilons}};
}

json to_json(const Construction& c)
{
    return json{{"family", c.family},
                {"function", to_json(c.F)},
                {"dual", to_json(c.Fstar)},
                {"sigma_claim", c.sigma_claim},
                {"epsilon_claim", c.epsilon_claim ? json(*c.epsilon_claim) : json(nullptr)}};
}

json to_json(const PreimageSet& D)
{
    return json{{"space", to_json(D.group)},
                {"members", D.members},
                {"values", D.values},
                {"zero_excluded", D.zero_excluded}};
}

PreimageSet preimage_set_from_json(const json& j)
{
    PreimageSet D{space_from_json(field_of(j, "space")), {}, uint_list(j, "values"), false};
    const auto& mj = field_of(j, "members");
    if (!mj.is_array()) schema("\"members\" must be a list");
    for (const auto& e : mj) {
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= D.group.size()) schema("member outside the space");
        D.members.push_back(e.get<std::uint64_t>());
    }
    std::sort(D.members.begin(), D.members.end());
    if (std::adjacent_find(D.members.begin(), D.members.end()) != D.members.end()) schema("repeated member");
    const auto& z = field_of(j, "zero_excluded");
    if (!z.is_boolean()) schema("\"zero_excluded\" must be a boolean");
    D.zero_excluded = z.get<bool>();
    return D;
}

json to_json(const PdsParams& P)
{
    return json{{"v", big(P.v)}, {"k", big(P.k)}, {"lambda", big(P.lambda)}, {"mu", big(P.mu)}, {"degenerate", P.degenerate}};
}

}  // namespace dbent::io
