#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dbent/constructions.hpp"
#include "dbent/error.hpp"
#include "dbent/pds.hpp"

using namespace dbent;

namespace {

VectorialFunction xy3()
{
    const Field F3(3, 1);
    const Space V({F3, F3});
    std::vector<std::uint32_t> t(9);
    for (std::uint64_t r = 0; r < 9; ++r) t[r] = (r % 3) * (r / 3) % 3;
    return VectorialFunction(V, F3, t);
}

// Difference counts through field subtraction on each factor, kept apart
// from the packed digit arithmetic used by the library.
std::optional<std::pair<std::uint64_t, std::uint64_t>> oracle_lambda_mu(const Space& G,
                                                                        const std::vector<std::uint64_t>& D)
{
    std::map<std::uint64_t, std::uint64_t> count;
    for (auto a : D)
        for (auto b : D) {
            auto ca = G.coords(Point{a}), cb = G.coords(Point{b});
            for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = G.factors()[i].sub(ca[i], cb[i]);
            ++count[G.from_coords(ca).rank];
        }
    std::set<std::uint64_t> in(D.begin(), D.end());
    std::set<std::uint64_t> lam, mu;
    for (std::uint64_t g = 1; g < G.size(); ++g) (in.count(g) ? lam : mu).insert(count[g]);
    if (lam.size() > 1 || mu.size() > 1) return std::nullopt;
    return std::make_pair(lam.empty() ? 0 : *lam.begin(), mu.empty() ? 0 : *mu.begin());
}

std::vector<FieldElem> coset_values(const Field& K, std::uint64_t exponent, const std::vector<FieldElem>& betas,
                                    bool with_zero)
{
    std::vector<FieldElem> A;
    if (with_zero) A.push_back(K.zero());
    for (auto b : betas)
        for (auto r : K.subgroup_coset(exponent, b).members) A.push_back(FieldElem{r});
    return A;
}

}  // namespace

TEST_CASE("preimage sets")
{
    const auto F = xy3();
    const auto D0 = preimage(F, {FieldElem{0}}, true);
    CHECK(D0.members == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(preimage(F, {}, true).size() == 0);
    CHECK(preimage(F, {FieldElem{0}, FieldElem{1}, FieldElem{2}}, false).size() == 9);
    CHECK(preimage(F, {FieldElem{2}, FieldElem{2}}, true).values == std::vector<std::uint32_t>{2});
    CHECK_THROWS_AS(preimage(F, {FieldElem{3}}, true), Error);
}

TEST_CASE("character sums of preimage sets")
{
    const auto F = xy3();
    CHECK(char_sum_preimage(F, Point{0}, FieldElem{0}) == CyclotomicInt::integer(3, 5));
    CHECK(char_sum_preimage(F, Point{0}, FieldElem{1}) == CyclotomicInt::integer(3, 2));

    // every (u, i) on a few bent and non-bent functions
    std::mt19937_64 rng(11);
    std::vector<VectorialFunction> samples{F, quad_trace(3, 4, 2, FieldElem{5}).F, mm_power(3, 3, 1, FieldElem{2}, 5).F,
                                           diag_quad(3, 2, {FieldElem{1}, FieldElem{3}}).F};
    {
        const Space V = Space::prime_power(3, 4);
        std::vector<std::uint32_t> t(V.size());
        for (auto& y : t) y = rng() % 9;
        samples.emplace_back(V, Field(3, 2), t);
    }
    {
        const Space V = Space::prime_power(5, 2);
        std::vector<std::uint32_t> t(V.size());
        for (auto& y : t) y = rng() % 5;
        samples.emplace_back(V, Field(5, 1), t);
    }
    for (const auto& G : samples) {
        std::vector<std::uint64_t> sizes(G.codomain.size(), 0);
        for (auto y : G.table) ++sizes[y];
        for (std::uint64_t u = 0; u < G.domain.size(); ++u)
            for (std::uint32_t i = 0; i < G.codomain.size(); ++i) {
                const auto v = char_sum_preimage(G, Point{u}, FieldElem{i});
                if (u == 0) CHECK(v == CyclotomicInt::integer(G.domain.p(), sizes[i]));
            }
    }
}

TEST_CASE("preimage sizes from the sign")
{
    const auto F = xy3();
    const auto cert = dual_bent_certificate(F, mm_power(3, 1, 1, FieldElem{1}, 1).Fstar);
    REQUIRE(cert);
    CHECK(preimage_sizes(F, *cert) == std::vector<BigInt>{5, 2, 2});

    const Field F9(3, 2);
    FieldElem ns{1};
    while (F9.is_square(ns)) ++ns.rank;
    const auto c = quad_trace(3, 2, 1, ns);
    const auto cn = dual_bent_certificate(c.F, c.Fstar);
    REQUIRE(cn);
    CHECK(preimage_sizes(c.F, *cn) == std::vector<BigInt>{1, 4, 4});

    const auto q = quad_trace(3, 2, 2, FieldElem{1});
    const auto cq = dual_bent_certificate(q.F, q.Fstar);
    REQUIRE(cq);
    CHECK_THROWS_AS(preimage_sizes(q.F, *cq), Error);

    const auto odd = quad_trace(3, 3, 1, FieldElem{1});
    try {
        preimage_sizes(odd.F, *dual_bent_certificate(odd.F, odd.Fstar));
        FAIL("expected HypothesisViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolation);
    }
    for (const auto& k : {quad_trace(5, 4, 2, FieldElem{3}), diag_quad(3, 2, {FieldElem{1}, FieldElem{1}}),
                          mm_power(3, 2, 2, FieldElem{1}, 1), switched_quadratic(3, SwitchedQuadraticParams{})}) {
        const auto ck = dual_bent_certificate(k.F, k.Fstar);
        REQUIRE(ck);
        CHECK_NOTHROW(preimage_sizes(k.F, *ck));
    }
}

TEST_CASE("conditions on sigma")
{
    const Field F3(3, 1), F7(7, 1);
    const auto inv3 = sigma_predicates(F3, {0, 1, 2}, 2);
    CHECK(inv3.is_identity);
    CHECK(inv3.power_exponent.has_value());

    std::vector<std::uint32_t> inv7(7, 0);
    for (std::uint32_t c = 1; c < 7; ++c) inv7[c] = F7.inv(FieldElem{c}).rank;
    const auto s3 = sigma_predicates(F7, inv7, 3);
    CHECK(s3.squares_stable);
    CHECK_FALSE(s3.coset_stable);
    CHECK_FALSE(s3.is_identity);
    CHECK(*s3.power_exponent == 1);
    CHECK(sigma_predicates(F7, inv7, 2).coset_stable);
    CHECK(sigma_predicates(F7, inv7, 3).coset_permuting);

    // a transposition of two squares keeps squares but moves cubes
    std::vector<std::uint32_t> swap{0, 2, 1, 3, 4, 5, 6};
    const auto sw = sigma_predicates(F7, swap, 3);
    CHECK(sw.squares_stable);
    CHECK_FALSE(sw.power_exponent.has_value());
    CHECK_FALSE(sw.coset_permuting);

    CHECK_THROWS_AS(sigma_predicates(F7, {0, 1, 1, 3, 4, 5, 6}, 2), Error);

    // every power map over GF(81): both routes for coset stability agree
    const Field K(3, 4);
    for (std::uint64_t t = 1; t < 80; ++t) {
        if (std::gcd(t, std::uint64_t{80}) != 1) continue;
        std::vector<std::uint32_t> sg(81, 0);
        for (std::uint32_t c = 1; c < 81; ++c) sg[c] = K.pow(FieldElem{c}, -static_cast<std::int64_t>(t)).rank;
        for (std::uint64_t l : {2, 4, 5, 8, 10, 16, 20, 40})
            CHECK_NOTHROW(sigma_predicates(K, sg, l));
    }
}

TEST_CASE("semiprimitive condition")
{
    auto a = semiprimitive_check(3, 2, 2);
    CHECK((a.ok && a.j == 1 && a.r == 1));
    a = semiprimitive_check(5, 2, 3);
    CHECK((a.ok && a.j == 1 && a.r == 1));
    a = semiprimitive_check(3, 2, 5);
    CHECK_FALSE(a.ok);
    CHECK(a.j == 2);
    a = semiprimitive_check(3, 4, 5);
    CHECK((a.ok && a.j == 2 && a.r == 1));
    CHECK_FALSE(semiprimitive_check(7, 2, 3).ok);
    CHECK_THROWS_AS(semiprimitive_check(3, 2, 1), Error);
}

TEST_CASE("closed-form parameters")
{
    CHECK(params_subset(2, 1, 3, 1, false, 1) == PdsParams{9, 2, 1, 0});
    CHECK(params_subset(2, 1, 3, 1, true, 1) == PdsParams{9, 4, 1, 2});
    const auto empty = params_subset(2, 1, 3, 0, false, 1);
    CHECK((empty.k == 0 && empty.degenerate));
    const auto all = params_subset(4, 1, 3, 3, true, -1);
    CHECK(all.k == 80);
    CHECK(all.lambda == 79);
    CHECK(all.degenerate);
    CHECK_THROWS_AS(params_subset(3, 1, 3, 1, false, 1), Error);

    CHECK(params_coset_union(8, 2, 7, 16, 1, 0, 1) == PdsParams{5764801, 1881600, 614705, 613872});
    CHECK(params_coset_union(8, 2, 7, 16, 1, 1, 1) == PdsParams{5764801, 2001600, 695455, 694722});
    CHECK(params_coset_union(16, 2, 5, 12, 1, 0, -1) ==
          PdsParams{BigInt("152587890625"), BigInt("73242375000"), BigInt("35156421875"), BigInt("35156437500")});
    CHECK(params_coset_union(16, 2, 5, 12, 1, 1, -1) ==
          PdsParams{BigInt("152587890625"), BigInt("79345515624"), BigInt("41259578123"), BigInt("41259562500")});
    CHECK(params_coset_union(16, 2, 5, 8, 1, 0, -1) ==
          PdsParams{BigInt("152587890625"), BigInt("48828250000"), BigInt("15624984375"), BigInt("15625125000")});
    CHECK(params_coset_union(16, 2, 5, 8, 2, 0, -1) ==
          PdsParams{BigInt("152587890625"), BigInt("97656500000"), BigInt("62500359375"), BigInt("62500250000")});
    CHECK(params_coset_union(16, 1, 3, 1, 1, 0, 1) == params_subset(16, 1, 3, 1, false, 1));
    CHECK_THROWS_AS(params_coset_union(8, 2, 7, 5, 1, 0, 1), Error);
    CHECK_THROWS_AS(params_coset_union(8, 2, 7, 16, 1, 2, 1), Error);
    // n/2 - s < 0 with a ratio that is not an integer
    try {
        params_coset_union(2, 2, 3, 8, 1, 0, 1);
        FAIL("expected NonIntegral");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonIntegral);
    }
}

TEST_CASE("Gaussian periods")
{
    const Field F9(3, 2);
    CHECK(gaussian_period(3, 2, 8, FieldElem{4}) == CyclotomicInt::zeta_power(3, F9.trace_to_prime(FieldElem{4})));
    FieldElem ns{1};
    while (F9.is_square(ns)) ++ns.rank;
    const FieldElem sq = F9.mul(ns, ns);
    CHECK(gaussian_period(3, 2, 2, FieldElem{1}) == CyclotomicInt::integer(3, 1));
    CHECK(gaussian_period(3, 2, 2, sq) == CyclotomicInt::integer(3, 1));
    CHECK(gaussian_period(3, 2, 2, ns) == CyclotomicInt::integer(3, -2));
    CHECK(gaussian_period_semiprimitive(3, 2, 2, ns) == CyclotomicInt::integer(3, -2));
    CHECK(gaussian_period_semiprimitive(5, 2, 3, FieldElem{1}) == CyclotomicInt::integer(5, 3));
    CHECK_THROWS_AS(gaussian_period(3, 2, 3, FieldElem{1}), Error);
    CHECK_THROWS_AS(gaussian_period(3, 2, 2, FieldElem{0}), Error);
    CHECK_THROWS_AS(gaussian_period_semiprimitive(7, 2, 3, FieldElem{1}), Error);

    int cases = 0;
    for (std::uint32_t p : {3u, 5u, 7u})
        for (std::uint32_t s = 1; ipow(p, s) <= 81; ++s) {
            const std::uint64_t q = ipow(p, s);
            for (std::uint64_t t = 2; t < q; ++t) {
                if ((q - 1) % t || !semiprimitive_check(p, s, t).ok) continue;
                ++cases;
                for (std::uint32_t a = 1; a < q; ++a)
                    CHECK(gaussian_period_semiprimitive(p, s, t, FieldElem{a}) == gaussian_period(p, s, t, FieldElem{a}));
            }
        }
    CHECK(cases >= 4);
}

TEST_CASE("difference-count verifier")
{
    const auto F = xy3();
    const auto D1 = preimage(F, {FieldElem{1}}, true);
    CHECK(verify_pds_bruteforce(D1) == PdsParams{9, 2, 1, 0});
    // fixture from the coordinate-wise difference oracle
    const auto D0 = preimage(F, {FieldElem{0}}, true);
    CHECK(*oracle_lambda_mu(F.domain, D0.members) == std::make_pair<std::uint64_t, std::uint64_t>(1, 2));
    CHECK(verify_pds_bruteforce(D0) == PdsParams{9, 4, 1, 2});

    const auto E = verify_pds_bruteforce(preimage(F, {}, true));
    CHECK((E && E->k == 0 && E->lambda == 0 && E->mu == 0 && E->degenerate));
    const auto W = verify_pds_bruteforce(preimage(F, {FieldElem{0}, FieldElem{1}, FieldElem{2}}, true));
    CHECK((W && W->k == 8 && W->lambda == 7 && W->mu == 0 && W->degenerate));

    try {
        verify_pds_bruteforce(preimage(F, {FieldElem{0}}, false));
        FAIL("expected ContainsZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ContainsZero);
    }
    PreimageSet odd{F.domain, {1}, {}, true};
    try {
        verify_pds_bruteforce(odd);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSymmetric);
    }
    SizeCaps tiny;
    tiny.bruteforce_set = 3;
    CHECK_THROWS_AS(verify_pds_bruteforce(D0, tiny), Error);
}

TEST_CASE("character verifier")
{
    const auto F = xy3();
    const auto D1 = preimage(F, {FieldElem{1}}, true);
    CHECK(verify_pds_characters(D1, PdsParams{9, 2, 1, 0}));
    CHECK_FALSE(verify_pds_characters(D1, PdsParams{9, 2, 1, 2}));  // wrong mu, delta = 1
    CHECK_FALSE(verify_pds_characters(D1, PdsParams{9, 6, 1, 0}));  // wrong k, delta = 25
    const auto W = preimage(F, {FieldElem{0}, FieldElem{1}, FieldElem{2}}, true);
    CHECK(verify_pds_characters(W, PdsParams{9, 8, 7, 0}));
    CHECK(verify_pds_characters(preimage(F, {}, true), PdsParams{9, 0, 0, 0}));
    try {
        verify_pds_characters(D1, PdsParams{9, 2, 0, 1});
        FAIL("expected NonSquareDelta");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSquareDelta);
    }
}

TEST_CASE("both verifiers agree on random symmetric sets")
{
    std::mt19937_64 rng(5);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {3, 3}, {5, 2}, {3, 4}}) {
        const Space G = Space::prime_power(p, n);
        for (int trial = 0; trial < 40; ++trial) {
            std::set<std::uint64_t> S;
            const auto density = rng() % 5;
            for (std::uint64_t x = 1; x < G.size(); ++x)
                if (rng() % 5 < density) {
                    S.insert(x);
                    S.insert(G.negate(Point{x}).rank);
                }
            PreimageSet D{G, std::vector<std::uint64_t>(S.begin(), S.end()), {}, true};
            const auto bf = verify_pds_bruteforce(D);
            const auto oracle = oracle_lambda_mu(G, D.members);
            CHECK(bf.has_value() == oracle.has_value());
            if (!bf) {
                // any candidate with a square delta must be rejected
                for (std::uint64_t lam = 0; lam < 4; ++lam)
                    for (std::uint64_t mu = 0; mu < 4; ++mu) {
                        PdsParams c{G.size(), D.size(), lam, mu};
                        const BigInt d = c.delta(), r = boost::multiprecision::sqrt(d);
                        if (d >= 0 && r * r == d) CHECK_FALSE(verify_pds_characters(D, c));
                    }
                continue;
            }
            CHECK(bf->lambda == oracle->first);
            CHECK(bf->mu == oracle->second);
            const BigInt d = bf->delta(), r = boost::multiprecision::sqrt(d);
            if (r * r == d) CHECK(verify_pds_characters(D, *bf));
        }
    }
}

TEST_CASE("preimage sets of dual-bent functions are the predicted PDS")
{
    SUBCASE("identity sigma, every subset")
    {
        for (const auto& c : {mm_power(3, 1, 1, FieldElem{1}, 1), spread_bent(3, 2, 2, default_spread_labels(3, 2, 2, FieldElem{0})),
                              quad_trace(3, 2, 1, FieldElem{2})}) {
            const auto cert = dual_bent_certificate(c.F, c.Fstar);
            REQUIRE(cert);
            const Field& K = c.F.codomain;
            REQUIRE(sigma_predicates(K, cert->sigma, 1).is_identity);
            const int eps = cert->epsilons[1];
            for (std::uint64_t mask = 0; mask < (1ULL << K.size()); ++mask) {
                std::vector<FieldElem> A;
                for (std::uint32_t i = 0; i < K.size(); ++i)
                    if (mask >> i & 1) A.push_back(FieldElem{i});
                const auto D = preimage(c.F, A, true);
                const auto want = params_subset(c.F.domain.n(), K.m(), 3, A.size(), mask & 1, eps);
                CHECK(verify_pds_bruteforce(D) == want);
                CHECK(verify_pds_characters(D, want));
            }
        }
    }
    SUBCASE("coset unions under a power sigma")
    {
        const auto c = mm_power(3, 2, 2, FieldElem{1}, 1);
        const auto cert = dual_bent_certificate(c.F, c.Fstar);
        REQUIRE(cert);
        const Field& K = c.F.codomain;
        const FieldElem w = K.primitive_element();
        for (std::uint64_t l : {2, 4, 8}) {
            const auto pred = sigma_predicates(K, cert->sigma, l);
            const std::uint64_t g = std::gcd(l, std::uint64_t{8});
            if (!pred.coset_stable) continue;
            for (std::uint64_t m1 = 0; m1 <= g; ++m1)
                for (std::uint32_t m0 = 0; m0 < 2; ++m0) {
                    std::vector<FieldElem> betas;
                    for (std::uint64_t i = 0; i < m1; ++i) betas.push_back(K.pow(w, static_cast<std::int64_t>(i)));
                    const auto D = preimage(c.F, coset_values(K, l, betas, m0), true);
                    const auto want = params_coset_union(4, 2, 3, 8 / g, m1, m0, cert->epsilons[1]);
                    CHECK(verify_pds_bruteforce(D) == want);
                }
        }
    }
    SUBCASE("semiprimitive cosets")
    {
        for (const auto& c : {diag_quad(3, 2, {FieldElem{1}, FieldElem{2}}), diag_quad(5, 2, {FieldElem{1}, FieldElem{7}})}) {
            const auto cert = dual_bent_certificate(c.F, c.Fstar);
            REQUIRE(cert);
            const Field& K = c.F.codomain;
            const std::uint32_t p = K.p();
            const std::uint64_t t = p == 3 ? 2 : 3;
            REQUIRE(semiprimitive_check(p, 2, t).ok);
            REQUIRE(sigma_predicates(K, cert->sigma, t).coset_permuting);
            const std::uint64_t h = (K.size() - 1) / t;
            for (std::uint64_t b = 0; b < t; ++b) {
                const auto D = preimage(c.F, coset_values(K, t, {K.pow(K.primitive_element(), b)}, false), true);
                const auto want = params_coset_union(c.F.domain.n(), 2, p, h, 1, 0, cert->epsilons[1]);
                CHECK(verify_pds_bruteforce(D) == want);
                CHECK(verify_pds_characters(D, want));
            }
        }
    }
}
