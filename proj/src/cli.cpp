#include "dbent/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>

#include "dbent/error.hpp"
#include "dbent/io.hpp"

namespace dbent::cli {

namespace {

using io::json;

// Malformed invocations that CLI11 cannot detect on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    json body;
    int code = Ok;
};

json error_record(const std::string& code, const std::string& message)
{
    return json{{"error", json{{"code", code}, {"message", message}}}};
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Schema, path + ": " + e.what());
    }
}

// A bare function file, or the "function" member of a construct bundle.
VectorialFunction read_function(const std::string& path, json* bundle = nullptr)
{
    const json j = read_json(path);
    if (j.is_object() && j.contains("function")) {
        if (bundle) *bundle = j;
        return io::function_from_json(j.at("function"));
    }
    return io::function_from_json(j);
}

int parse_eps(const std::string& s)
{
    if (s == "1" || s == "+1") return 1;
    if (s == "-1") return -1;
    throw UsageError("--eps must be +1 or -1");
}

std::vector<FieldElem> elems(const std::vector<std::uint32_t>& ranks)
{
    std::vector<FieldElem> out;
    for (auto r : ranks) out.push_back(FieldElem{r});
    return out;
}

FieldElem component_elem(const VectorialFunction& F, std::uint32_t c)
{
    if (c == 0 || c >= F.codomain.size()) throw UsageError("--component must be a nonzero codomain rank");
    return FieldElem{c};
}

json report(const PdsParams& P, const std::string& method, const json& verified)
{
    json out = io::to_json(P);
    out["method"] = method;
    out["verified"] = verified;
    return out;
}

struct ConstructArgs {
    std::string family;
    std::uint32_t p = 0, m = 1, n = 2, s = 1, a = 1, gamma0 = 0, beta = 1, gamma = 1;
    std::uint64_t e = 1;
    std::vector<std::uint32_t> coeffs, labels, alpha{1, 1, 1};
};

Result construct(const ConstructArgs& o)
{
    if (o.family == "mm-power") return {io::to_json(mm_power(o.p, o.m, o.s, FieldElem{o.a}, o.e))};
    if (o.family == "mm-qpoly") {
        const QPolynomial L = o.coeffs.empty() ? QPolynomial::identity(o.s) : QPolynomial{o.s, elems(o.coeffs)};
        return {io::to_json(mm_qpoly(o.p, o.m, o.s, FieldElem{o.a}, L))};
    }
    if (o.family == "quad-trace") return {io::to_json(quad_trace(o.p, o.n, o.s, FieldElem{o.a}))};
    if (o.family == "diag-quad") return {io::to_json(diag_quad(o.p, o.s, elems(o.coeffs)))};
    if (o.family == "spread") {
        const auto labels =
            o.labels.empty() ? default_spread_labels(o.p, o.m, o.s, FieldElem{o.gamma0}) : elems(o.labels);
        return {io::to_json(spread_bent(o.p, o.m, o.s, labels))};
    }
    if (o.alpha.size() != 3) throw UsageError("--alpha takes three ranks");
    SwitchedQuadraticParams prm;
    prm.n = o.n;
    prm.m = o.m;
    prm.s = o.s;
    prm.alpha1 = FieldElem{o.alpha[0]};
    prm.alpha2 = FieldElem{o.alpha[1]};
    prm.alpha3 = FieldElem{o.alpha[2]};
    prm.beta = FieldElem{o.beta};
    prm.gamma = FieldElem{o.gamma};
    if (!o.coeffs.empty()) prm.L = QPolynomial{o.s, elems(o.coeffs)};
    return {io::to_json(switched_quadratic(o.p, prm))};
}

Result certify(const std::string& file, const std::string& dual_file, const SizeCaps& caps)
{
    json bundle;
    const auto F = read_function(file, &bundle);
    std::optional<VectorialFunction> G;
    if (!dual_file.empty()) G = read_function(dual_file);
    else if (bundle.contains("dual")) G = io::function_from_json(bundle.at("dual"));
    else throw UsageError("certify needs --dual or a construct bundle");
    if (!(G->domain == F.domain) || !(G->codomain == F.codomain))
        throw Error(ErrorCode::Schema, "function and dual live on different spaces");

    const auto cert = dual_bent_certificate(F, *G, caps);
    json out{{"certified", cert.has_value()}};
    bool ok = cert.has_value();
    out["sigma"] = cert ? json(cert->sigma) : json(nullptr);
    out["epsilons"] = cert ? json(cert->epsilons) : json(nullptr);
    if (cert && dual_file.empty()) {
        const bool sigma_ok = bundle.at("sigma_claim") == json(cert->sigma);
        out["sigma_matches_claim"] = sigma_ok;
        ok = ok && sigma_ok;
        const auto& eps = bundle.at("epsilon_claim");
        if (eps.is_null()) {
            out["epsilon_matches_claim"] = nullptr;
        } else {
            const bool eps_ok = eps == json(cert->epsilons);
            out["epsilon_matches_claim"] = eps_ok;
            ok = ok && eps_ok;
        }
    }
    return {out, ok ? Ok : Failure};
}

struct ParamsArgs {
    std::string theorem, eps;
    std::uint32_t p = 0, s = 1, n = 0, m0 = 0;
    std::uint64_t size_a = 0, hsize = 0, m1 = 0;
    bool contains_zero = false;
};

Result pds_params(const ParamsArgs& o)
{
    const int eps = parse_eps(o.eps);
    if (o.n == 0) throw UsageError("--ntotal is required");
    const PdsParams P = o.theorem == "subset" ? params_subset(o.n, o.s, o.p, o.size_a, o.contains_zero, eps)
                                              : params_coset_union(o.n, o.s, o.p, o.hsize, o.m1, o.m0, eps);
    return {report(P, "formula", nullptr)};
}

struct VerifyArgs {
    std::string set_file, file;
    std::vector<std::uint32_t> values;
    bool keep_zero = false;
    std::vector<std::string> candidate;
    std::string method = "auto";
};

Result pds_verify(const VerifyArgs& o, const SizeCaps& caps)
{
    PreimageSet D = [&] {
        if (!o.set_file.empty()) return io::preimage_set_from_json(read_json(o.set_file));
        if (o.file.empty()) throw UsageError("pds-verify needs --set or --file with --values");
        const auto F = read_function(o.file);
        for (auto v : o.values)
            if (v >= F.codomain.size()) throw UsageError("--values entry outside the codomain");
        return preimage(F, elems(o.values), !o.keep_zero);
    }();
    std::optional<PdsParams> candidate;
    if (!o.candidate.empty()) {
        if (o.candidate.size() != 4) throw UsageError("--candidate takes v,k,lambda,mu");
        std::vector<BigInt> v;
        for (const auto& s : o.candidate) v.push_back(io::big_from(json(s)));
        candidate = PdsParams{v[0], v[1], v[2], v[3]};
    }
    PdsReport r;
    if (o.method == "auto") {
        r = verify_pds(D, candidate, caps);
    } else if (o.method == "bruteforce") {
        const auto found = verify_pds_bruteforce(D, caps);
        r.method = o.method;
        r.verified = found && (!candidate || *found == *candidate);
        r.params = found ? *found : candidate.value_or(PdsParams{D.group.size(), D.size(), 0, 0});
    } else {
        if (!candidate) throw UsageError("--method characters needs --candidate");
        r.method = o.method;
        r.params = *candidate;
        r.verified = verify_pds_characters(D, *candidate, caps);
    }
    return {report(r.params, r.method, r.verified), r.verified ? Ok : Failure};
}

struct Example {
    const char* name;
    std::uint32_t p, s, ntotal;
    std::uint64_t hsize, m1;
    std::uint32_t m0;
    int eps;
    const char *v, *k, *lambda, *mu;
};

// Published parameter quadruples, each with the inputs that should give it.
const Example kExamples[] = {
    {"switched quadratic over GF(5^8) x GF(5^4)^2, squares", 5, 2, 16, 12, 1, 0, -1, "152587890625", "73242375000",
     "35156421875", "35156437500"},
    {"switched quadratic over GF(5^8) x GF(5^4)^2, zero and squares", 5, 2, 16, 12, 1, 1, -1, "152587890625",
     "79345515624", "41259578123", "41259562500"},
    {"Tr_2^4(x1 x2^11) over GF(7^4)^2, one coset of cubes", 7, 2, 8, 16, 1, 0, 1, "5764801", "1881600", "614705",
     "613872"},
    {"Tr_2^4(x1 x2^11) over GF(7^4)^2, zero and the cubes", 7, 2, 8, 16, 1, 1, 1, "5764801", "2001600", "695455",
     "694722"},
    {"Tr_4^8(x y^7) over GF(3^8)^2, one coset of fifth powers", 3, 4, 16, 16, 1, 0, 1, "43046721", "8501760", "1682289",
     "1678320"},
    {"Tr_4^8(x y^7) over GF(3^8)^2, zero and two cosets of fifth powers", 3, 4, 16, 16, 2, 1, 1, "43046721", "17541440",
     "7148815", "7147602"},
    {"switched quadratic over GF(5^8) x GF(5^4)^2, one coset of cubes", 5, 2, 16, 8, 1, 0, -1, "152587890625",
     "48828250000", "15624984375", "15625125000"},
    {"switched quadratic over GF(5^8) x GF(5^4)^2, two cosets of cubes", 5, 2, 16, 8, 2, 0, -1, "152587890625",
     "97656500000", "62500359375", "62500250000"},
};

Result reproduce_examples()
{
    json list = json::array();
    bool all = true;
    for (const auto& ex : kExamples) {
        const PdsParams want{BigInt(ex.v), BigInt(ex.k), BigInt(ex.lambda), BigInt(ex.mu)};
        const PdsParams got = params_coset_union(ex.ntotal, ex.s, ex.p, ex.hsize, ex.m1, ex.m0, ex.eps);
        const bool match = got == want;
        all = all && match;
        list.push_back(json{{"name", ex.name},
                            {"inputs", json{{"p", ex.p}, {"s", ex.s}, {"ntotal", ex.ntotal}, {"hsize", ex.hsize},
                                            {"m1", ex.m1}, {"m0", ex.m0}, {"eps", ex.eps}}},
                            {"expected", io::to_json(want)},
                            {"computed", io::to_json(got)},
                            {"match", match}});
    }
    return {json{{"examples", list}, {"all_match", all}}, all ? Ok : Failure};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out)
{
    CLI::App app{"Vectorial dual-bent functions and the partial difference sets they give", "dbent"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t size_cap = 0;
    std::string out_path;
    app.add_option("--size-cap", size_cap, "Replace every enumeration cap (overrides BENT_SIZE_CAP)")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "Write the result to this file instead of standard output");

    ConstructArgs ca;
    auto* construct_cmd = app.add_subcommand("construct", "Build a function and its predicted dual");
    construct_cmd->add_option("--family", ca.family)
        ->required()
        ->check(CLI::IsMember({"mm-power", "mm-qpoly", "quad-trace", "diag-quad", "spread", "switched-quadratic"}));
    construct_cmd->add_option("--p", ca.p)->required();
    construct_cmd->add_option("--m", ca.m);
    construct_cmd->add_option("--n", ca.n);
    construct_cmd->add_option("--s", ca.s);
    construct_cmd->add_option("--a", ca.a, "Rank of the coefficient a");
    construct_cmd->add_option("--e", ca.e, "Exponent of the power permutation");
    construct_cmd->add_option("--coeffs", ca.coeffs, "q-polynomial or diagonal coefficients (ranks)")->delimiter(',');
    construct_cmd->add_option("--labels", ca.labels, "Spread labels, U_0 first (ranks)")->delimiter(',');
    construct_cmd->add_option("--gamma0", ca.gamma0, "Label of U_0 when --labels is absent");
    construct_cmd->add_option("--alpha", ca.alpha, "alpha1,alpha2,alpha3 (ranks)")->delimiter(',');
    construct_cmd->add_option("--beta", ca.beta);
    construct_cmd->add_option("--gamma", ca.gamma);

    std::string file, dual_file;
    std::uint32_t comp = 1;
    auto* walsh_cmd = app.add_subcommand("walsh", "Walsh spectrum of a component");
    walsh_cmd->add_option("--file", file)->required();
    walsh_cmd->add_option("--component", comp);
    auto* classify_cmd = app.add_subcommand("classify", "Bentness, weak regularity and dual of a component");
    classify_cmd->add_option("--file", file)->required();
    classify_cmd->add_option("--component", comp);
    auto* certify_cmd = app.add_subcommand("certify", "Check that a function is vectorial dual-bent with a given dual");
    certify_cmd->add_option("--file", file)->required();
    certify_cmd->add_option("--dual", dual_file);

    std::vector<std::uint32_t> values;
    bool keep_zero = false;
    auto* extract_cmd = app.add_subcommand("pds-extract", "Preimage set of a set of values");
    extract_cmd->add_option("--file", file)->required();
    extract_cmd->add_option("--values", values)->delimiter(',')->required();
    extract_cmd->add_flag("--keep-zero", keep_zero, "Keep the zero point");

    ParamsArgs pa;
    auto* params_cmd = app.add_subcommand("pds-params", "Closed-form PDS parameters");
    params_cmd->add_option("--theorem", pa.theorem)->required()->check(CLI::IsMember({"subset", "coset-union"}));
    params_cmd->add_option("--p", pa.p)->required();
    params_cmd->add_option("--s", pa.s)->required();
    params_cmd->add_option("--ntotal,--n", pa.n, "Dimension of the group over GF(p)");
    params_cmd->add_option("--size-a", pa.size_a);
    params_cmd->add_flag("--contains-zero", pa.contains_zero);
    params_cmd->add_option("--hsize", pa.hsize);
    params_cmd->add_option("--m1", pa.m1);
    params_cmd->add_option("--m0", pa.m0);
    params_cmd->add_option("--eps", pa.eps)->required();

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("pds-verify", "Verify that a set is a partial difference set");
    verify_cmd->add_option("--set", va.set_file, "Output of pds-extract");
    verify_cmd->add_option("--file", va.file);
    verify_cmd->add_option("--values", va.values)->delimiter(',');
    verify_cmd->add_flag("--keep-zero", va.keep_zero);
    verify_cmd->add_option("--candidate", va.candidate, "v,k,lambda,mu")->delimiter(',');
    verify_cmd->add_option("--method", va.method, "auto, bruteforce or characters")
        ->check(CLI::IsMember({"auto", "bruteforce", "characters"}));

    std::uint32_t gp = 0, gs = 1, ga = 1;
    std::uint64_t gt = 2;
    auto* gauss_cmd = app.add_subcommand("gaussian-period", "Gaussian period, with the closed form when it applies");
    gauss_cmd->add_option("--p", gp)->required();
    gauss_cmd->add_option("--s", gs)->required();
    gauss_cmd->add_option("--t", gt)->required();
    gauss_cmd->add_option("--a", ga)->required();

    auto* examples_cmd = app.add_subcommand("reproduce-examples", "Recompute the published parameter quadruples");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        out << error_record("usage", e.what()).dump(2) << '\n';
        return Usage;
    }

    SizeCaps caps = default_caps();
    if (size_cap) caps.transform_points = caps.table_points = caps.bruteforce_set = caps.sigma_candidates = size_cap;

    Result result;
    try {
        if (*construct_cmd) {
            result = construct(ca);
        } else if (*walsh_cmd || *classify_cmd) {
            const auto F = read_function(file);
            const auto f = component(F, component_elem(F, comp));
            if (*walsh_cmd) {
                const auto w = walsh_full(f, caps);
                result.body = json{{"p", F.domain.p()}, {"n", F.domain.n()}, {"component", comp},
                                   {"spectrum", io::to_json(w)}, {"parseval", parseval_holds(w, F.domain.n())}};
            } else {
                result.body = io::to_json(classify_bent(f, caps));
                result.body["component"] = comp;
            }
        } else if (*certify_cmd) {
            result = certify(file, dual_file, caps);
        } else if (*extract_cmd) {
            const auto F = read_function(file);
            for (auto v : values)
                if (v >= F.codomain.size()) throw UsageError("--values entry outside the codomain");
            result.body = io::to_json(preimage(F, elems(values), !keep_zero));
        } else if (*params_cmd) {
            result = pds_params(pa);
        } else if (*verify_cmd) {
            result = pds_verify(va, caps);
        } else if (*gauss_cmd) {
            const auto value = gaussian_period(gp, gs, gt, FieldElem{ga});
            const bool semi = gt >= 2 && semiprimitive_check(gp, gs, gt).ok;
            result.body = json{{"value", io::to_json(value)}, {"semiprimitive", semi}};
            if (semi) {
                const auto closed = gaussian_period_semiprimitive(gp, gs, gt, FieldElem{ga});
                result.body["closed_form"] = io::to_json(closed);
                result.body["agree"] = closed == value;
                if (!(closed == value)) result.code = Failure;
            } else {
                result.body["closed_form"] = nullptr;
                result.body["agree"] = nullptr;
            }
        } else if (*examples_cmd) {
            result = reproduce_examples();
        }
    } catch (const UsageError& e) {
        out << error_record("usage", e.what()).dump(2) << '\n';
        return Usage;
    } catch (const Error& e) {
        out << error_record(std::string(to_string(e.code())), e.what()).dump(2) << '\n';
        return e.code() == ErrorCode::Schema ? Usage : Failure;
    } catch (const std::exception& e) {
        out << error_record("internal", e.what()).dump(2) << '\n';
        return Failure;
    }

    const std::string text = result.body.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            out << error_record("usage", "cannot write " + out_path).dump(2) << '\n';
            return Usage;
        }
        f << text;
    }
    return result.code;
}

}  // namespace dbent::cli
