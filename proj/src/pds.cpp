#include "dbent/pds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "dbent/error.hpp"

namespace dbent {

namespace {

using Rational = boost::multiprecision::cpp_rational;

Rational rat_pow(std::uint32_t p, std::int64_t e)
{
    const BigInt base = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), base) : Rational(base);
}

BigInt to_integer(const Rational& r, const char* what)
{
    if (boost::multiprecision::denominator(r) != 1)
        throw Error(ErrorCode::NonIntegral, std::string(what) + " is not an integer");
    return boost::multiprecision::numerator(r);
}

// Applies the conventions for vacuous lambda/mu before insisting on integers.
PdsParams finish(const BigInt& v, const Rational& k, Rational lambda, Rational mu)
{
    PdsParams out;
    out.v = v;
    out.k = to_integer(k, "k");
    if (out.k == 0) {
        lambda = 0;
        mu = 0;
        out.degenerate = true;
    } else if (out.k == v - 1) {
        mu = 0;
        out.degenerate = true;
    }
    out.lambda = to_integer(lambda, "lambda");
    out.mu = to_integer(mu, "mu");
    if (out.k < 0 || out.lambda < 0 || out.mu < 0 || out.k >= v)
        throw Error(ErrorCode::InvalidParameter, "parameters out of range for these inputs");
    return out;
}

void require_epsilon(int epsilon)
{
    if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::InvalidParameter, "epsilon must be +1 or -1");
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void check_candidate(const PreimageSet& D)
{
    if (D.contains(Point{0})) throw Error(ErrorCode::ContainsZero, "the set contains 0");
    for (auto x : D.members)
        if (!D.contains(D.group.negate(Point{x}))) throw Error(ErrorCode::NotSymmetric, "the set is not closed under negation");
}

}  // namespace

bool PreimageSet::contains(Point x) const { return std::binary_search(members.begin(), members.end(), x.rank); }

PreimageSet preimage(const VectorialFunction& F, const std::vector<FieldElem>& A, bool exclude_zero_point)
{
    std::vector<bool> in_a(F.codomain.size(), false);
    PreimageSet D{F.domain, {}, {}, exclude_zero_point};
    for (auto a : A) {
        if (a.rank >= F.codomain.size()) throw Error(ErrorCode::InvalidParameter, "value outside the codomain");
        if (!in_a[a.rank]) D.values.push_back(a.rank);
        in_a[a.rank] = true;
    }
    std::sort(D.values.begin(), D.values.end());
    for (std::uint64_t x = exclude_zero_point ? 1 : 0; x < F.domain.size(); ++x)
        if (in_a[F.table[x]]) D.members.push_back(x);
    return D;
}

CyclotomicInt char_sum_preimage(const VectorialFunction& F, Point u, FieldElem i)
{
    const std::uint32_t p = F.domain.p();
    const Field& K = F.codomain;
    const std::uint64_t q = K.size();
    if (u.rank >= F.domain.size() || i.rank >= q) throw Error(ErrorCode::InvalidParameter, "point or value out of range");

    std::vector<std::uint32_t> ux(F.domain.size());
    for (std::uint64_t x = 0; x < F.domain.size(); ++x) ux[x] = F.domain.inner_product(u, Point{x});

    std::vector<BigInt> direct(p, 0);
    for (std::uint64_t x = 0; x < F.domain.size(); ++x)
        if (F.table[x] == i.rank) direct[ux[x]] += 1;

    // Sum over every c, including c = 0 whose term p^n [u = 0] supplies the
    // p^{n-s} of the principal character.
    std::vector<std::int64_t> acc(p, 0), counts(p);
    std::vector<std::uint32_t> tr(q);
    for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t y = 0; y < q; ++y) tr[y] = K.trace_to_prime(K.mul(FieldElem{c}, FieldElem{y}));
        std::fill(counts.begin(), counts.end(), 0);
        for (std::uint64_t x = 0; x < F.domain.size(); ++x) ++counts[(tr[F.table[x]] + ux[x]) % p];
        const std::uint32_t shift = tr[i.rank];
        for (std::uint32_t j = 0; j < p; ++j) acc[(j + p - shift) % p] += counts[j];
    }
    std::vector<BigInt> full(acc.begin(), acc.end());
    const auto formula = CyclotomicInt::from_full(p, full).divide_exact(BigInt(q));
    const auto value = CyclotomicInt::from_full(p, direct);
    if (!formula || !(*formula == value))
        throw Error(ErrorCode::FormulaMismatch, "character sum of a preimage set disagrees with its Walsh expansion");
    return value;
}

std::vector<BigInt> preimage_sizes(const VectorialFunction& F, const DualBentCertificate& cert)
{
    const Space& V = F.domain;
    const Field& K = F.codomain;
    const std::uint32_t p = V.p(), n = V.n(), s = K.m();
    if (n % 2) throw Error(ErrorCode::HypothesisViolation, "n is odd");
    if (F.table[0] != 0) throw Error(ErrorCode::HypothesisViolation, "F(0) != 0");
    for (std::uint64_t x = 0; x < V.size(); ++x)
        if (F.table[V.negate(Point{x}).rank] != F.table[x])
            throw Error(ErrorCode::HypothesisViolation, "F(-x) != F(x)");
    if (cert.epsilons.size() != K.size()) throw Error(ErrorCode::InvalidParameter, "certificate does not match F");
    const int eps = cert.epsilons[1];
    for (std::uint64_t c = 1; c < K.size(); ++c)
        if (cert.epsilons[c] == 0 || cert.epsilons[c] != eps)
            throw Error(ErrorCode::HypothesisViolation, "component signs are not one constant epsilon");

    const Rational base = rat_pow(p, static_cast<std::int64_t>(n) - s);
    const Rational half = rat_pow(p, static_cast<std::int64_t>(n / 2) - s);
    const BigInt ps = boost::multiprecision::pow(BigInt(p), s);
    std::vector<BigInt> sizes(K.size());
    sizes[0] = to_integer(base + eps * (ps - 1) * half, "|D_0|");
    const BigInt other = to_integer(base - eps * half, "|D_i|");
    for (std::uint64_t i = 1; i < K.size(); ++i) sizes[i] = other;

    std::vector<BigInt> counted(K.size(), 0);
    for (auto y : F.table) counted[y] += 1;
    if (counted != sizes) throw Error(ErrorCode::FormulaMismatch, "preimage sizes disagree with direct counts");
    return sizes;
}

SigmaPredicates sigma_predicates(const Field& K, const std::vector<std::uint32_t>& sigma, std::uint64_t exponent)
{
    const std::uint64_t q = K.size();
    if (sigma.size() != q) throw Error(ErrorCode::NotBijection, "sigma must have one entry per field element");
    if (exponent == 0) throw Error(ErrorCode::InvalidParameter, "exponent must be positive");
    std::vector<std::uint32_t> inv(q, 0);
    for (std::uint32_t c = 1; c < q; ++c) {
        if (sigma[c] == 0 || sigma[c] >= q || inv[sigma[c]] != 0)
            throw Error(ErrorCode::NotBijection, "sigma is not a permutation of the nonzero elements");
        inv[sigma[c]] = c;
    }

    const std::uint64_t g = std::gcd(exponent, q - 1);
    auto coset = [&](std::uint32_t x) { return K.log(FieldElem{x}) % g; };

    SigmaPredicates out;
    out.is_identity = out.coset_stable = out.squares_stable = out.coset_permuting = true;
    std::vector<std::int64_t> image(g, -1);
    for (std::uint32_t c = 1; c < q; ++c) {
        if (sigma[c] != c) out.is_identity = false;
        if (coset(inv[c]) != coset(c)) out.coset_stable = false;
        if (K.is_square(FieldElem{c}) && !K.is_square(FieldElem{sigma[c]})) out.squares_stable = false;
        auto& im = image[coset(c)];
        const auto target = static_cast<std::int64_t>(coset(sigma[c]));
        if (im >= 0 && im != target) out.coset_permuting = false;
        im = target;
    }

    const auto w = K.primitive_element();
    const auto tp = static_cast<std::uint64_t>(mod(-static_cast<std::int64_t>(K.log(FieldElem{sigma[w.rank]})),
                                                   static_cast<std::int64_t>(q - 1)));
    bool power = true;
    for (std::uint32_t c = 1; c < q && power; ++c)
        power = K.pow(FieldElem{c}, -static_cast<std::int64_t>(tp)).rank == sigma[c];
    if (power) {
        out.power_exponent = tp;
        std::uint64_t r = 1;
        while ((r * tp) % (q - 1) != 1 % (q - 1)) ++r;
        const bool shortcut = (1 + r) % g == 0;
        if (shortcut != out.coset_stable)
            throw Error(ErrorCode::FormulaMismatch, "coset condition disagrees with the power-map criterion");
    }
    return out;
}

Semiprimitive semiprimitive_check(std::uint32_t p, std::uint32_t s, std::uint64_t t)
{
    if (t < 2) throw Error(ErrorCode::InvalidParameter, "t must be at least 2");
    Semiprimitive out;
    std::uint64_t pj = 1;
    for (std::uint32_t j = 1; j <= s; ++j) {
        pj = pj * (p % t) % t;
        if ((pj + 1) % t == 0) {
            out.j = j;
            break;
        }
    }
    if (out.j && s % (2 * out.j) == 0) {
        out.ok = true;
        out.r = s / (2 * out.j);
    }
    return out;
}

PdsParams params_subset(std::uint32_t n, std::uint32_t s, std::uint32_t p, std::uint64_t size_a, bool contains_zero,
                        int epsilon)
{
    require_epsilon(epsilon);
    if (n % 2) throw Error(ErrorCode::InvalidParameter, "n must be even");
    const BigInt ps = boost::multiprecision::pow(BigInt(p), s);
    if (size_a > ps || (contains_zero && size_a == 0)) throw Error(ErrorCode::InvalidParameter, "impossible size of A");
    const BigInt v = boost::multiprecision::pow(BigInt(p), n);
    const Rational a(size_a), e(epsilon);
    const Rational big = rat_pow(p, static_cast<std::int64_t>(n) - s);
    const Rational sq = rat_pow(p, static_cast<std::int64_t>(n) - 2 * s);
    const Rational half = rat_pow(p, static_cast<std::int64_t>(n / 2) - s);
    if (contains_zero)
        return finish(v, a * big + e * (ps - a) * half - 1, sq * a * a + e * (ps - a) * half - 2,
                      sq * a * a + e * a * half);
    return finish(v, a * big - e * a * half, sq * a * a + e * (ps - 3 * a) * half, sq * a * a - e * a * half);
}

PdsParams params_coset_union(std::uint32_t n_total, std::uint32_t s, std::uint32_t p, std::uint64_t h_size,
                             std::uint64_t m1, std::uint32_t m0, int epsilon)
{
    require_epsilon(epsilon);
    if (n_total % 2) throw Error(ErrorCode::InvalidParameter, "n must be even");
    if (m0 > 1) throw Error(ErrorCode::InvalidParameter, "m0 must be 0 or 1");
    const BigInt ps = boost::multiprecision::pow(BigInt(p), s);
    if (h_size == 0 || (ps - 1) % h_size != 0) throw Error(ErrorCode::NonDivisor, "h_size must divide p^s - 1");
    if (m1 > (ps - 1) / h_size) throw Error(ErrorCode::InvalidParameter, "m1 exceeds the number of cosets");
    const BigInt v = boost::multiprecision::pow(BigInt(p), n_total);
    const Rational e(epsilon), M0(m0), mh(BigInt(m1) * h_size);
    const Rational size = mh + M0;
    const Rational big = rat_pow(p, static_cast<std::int64_t>(n_total) - s);
    const Rational sq = rat_pow(p, static_cast<std::int64_t>(n_total) - 2 * s);
    const Rational half = rat_pow(p, static_cast<std::int64_t>(n_total / 2) - s);
    return finish(v, size * big + e * half * (M0 * ps - size) - M0,
                  size * size * sq + e * half * (Rational(ps) + (2 * M0 - 3) * mh - M0) - 2 * M0,
                  size * size * sq + e * half * ((2 * M0 - 1) * mh + M0));
}

CyclotomicInt gaussian_period(std::uint32_t p, std::uint32_t s, std::uint64_t t, FieldElem a)
{
    const Field K(p, s);
    if (t == 0 || (K.size() - 1) % t != 0) throw Error(ErrorCode::NonDivisor, "t must divide p^s - 1");
    if (a.rank == 0 || a.rank >= K.size()) throw Error(ErrorCode::ZeroArgument, "a must be a nonzero field element");
    std::vector<BigInt> full(p, 0);
    for (auto x : K.subgroup_coset(t, K.one()).members) full[K.trace_to_prime(K.mul(a, FieldElem{x}))] += 1;
    return CyclotomicInt::from_full(p, full);
}

CyclotomicInt gaussian_period_semiprimitive(std::uint32_t p, std::uint32_t s, std::uint64_t t, FieldElem a)
{
    const auto sp = semiprimitive_check(p, s, t);
    if (!sp.ok) throw Error(ErrorCode::NotSemiprimitive, "no j with t | p^j + 1 and s = 2jr");
    const Field K(p, s);
    if (a.rank == 0 || a.rank >= K.size()) throw Error(ErrorCode::ZeroArgument, "a must be a nonzero field element");
    const BigInt root = boost::multiprecision::pow(BigInt(p), s / 2);
    const BigInt pj1 = boost::multiprecision::pow(BigInt(p), sp.j) + 1;
    const bool r_odd = sp.r % 2 == 1;

    BigInt value;
    if (r_odd && (pj1 / t) % 2 == 1) {
        const std::uint64_t order = K.size() - 1;
        const FieldElem w1 = K.primitive_element();
        std::uint64_t k = 2;
        while (std::gcd(k, order) != 1) ++k;
        const FieldElem w2 = K.pow(w1, static_cast<std::int64_t>(k));
        const bool in1 = K.subgroup_coset(t, K.pow(w1, static_cast<std::int64_t>(t / 2))).contains(a);
        const bool in2 = K.subgroup_coset(t, K.pow(w2, static_cast<std::int64_t>(t / 2))).contains(a);
        if (in1 != in2) throw Error(ErrorCode::FormulaMismatch, "the coset w^{t/2} H_t depends on w");
        if ((root + 1) % t != 0) throw Error(ErrorCode::FormulaMismatch, "non-integral Gaussian period");
        value = (in1 ? root : BigInt(0)) - (root + 1) / t;
    } else {
        const bool in_h = K.subgroup_coset(t, K.one()).contains(a);
        const BigInt signed_root = r_odd ? BigInt(-root) : root;
        if ((signed_root - 1) % t != 0) throw Error(ErrorCode::FormulaMismatch, "non-integral Gaussian period");
        value = (in_h ? BigInt(-signed_root) : BigInt(0)) + (signed_root - 1) / t;
    }
    return CyclotomicInt::integer(p, value);
}

std::optional<PdsParams> verify_pds_bruteforce(const PreimageSet& D, const SizeCaps& caps)
{
    check_candidate(D);
    const Space& G = D.group;
    const std::uint64_t v = G.size();
    if (D.size() > caps.bruteforce_set) throw Error(ErrorCode::SizeGuard, "set too large for difference counting");
    if (v > caps.table_points) throw Error(ErrorCode::SizeGuard, "group too large for difference counting");

    PdsParams out;
    out.v = v;
    out.k = D.size();
    if (D.size() == 0) {
        out.degenerate = true;
        return out;
    }
    std::vector<std::uint32_t> count(v, 0);
    const auto& arith = G.arith();
    const std::uint32_t nc = arith.chunk_count();
    std::vector<std::uint16_t> chunks(D.size() * nc);
    for (std::size_t i = 0; i < D.size(); ++i) arith.split(D.members[i], chunks.data() + i * nc);
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < D.size(); ++j) ++count[arith.sub_split(chunks.data() + i * nc, chunks.data() + j * nc)];

    std::vector<bool> in_d(v, false);
    for (auto d : D.members) in_d[d] = true;
    std::optional<std::uint32_t> lambda, mu;
    for (std::uint64_t g = 1; g < v; ++g) {
        auto& slot = in_d[g] ? lambda : mu;
        if (!slot) slot = count[g];
        else if (*slot != count[g]) return std::nullopt;
    }
    out.lambda = lambda.value_or(0);
    out.mu = mu.value_or(0);
    out.degenerate = !mu;
    return out;
}

bool verify_pds_characters(const PreimageSet& D, const PdsParams& candidate, const SizeCaps& caps)
{
    check_candidate(D);
    const Space& G = D.group;
    const BigInt delta = candidate.delta();
    if (delta < 0) throw Error(ErrorCode::NonSquareDelta, "delta is negative");
    const BigInt root = boost::multiprecision::sqrt(delta);
    if (root * root != delta) throw Error(ErrorCode::NonSquareDelta, "delta is not a perfect square");
    if (candidate.v != G.size() || candidate.k != D.size()) return false;

    const std::uint32_t p = G.p();
    std::vector<std::int64_t> weights(G.size() * p, 0);
    for (auto x : D.members) weights[x * p] = 1;
    const auto spec = character_transform(G, std::move(weights), caps);
    const BigInt hi = candidate.beta() + root, lo = candidate.beta() - root;
    for (std::uint64_t a = 1; a < G.size(); ++a) {
        const auto* row = spec.row(a);
        for (std::uint32_t j = 1; j + 1 < p; ++j)
            if (row[j] != 0) return false;
        const BigInt twice = 2 * BigInt(row[0]);
        if (twice != hi && twice != lo) return false;
    }
    return true;
}

PdsReport verify_pds(const PreimageSet& D, const std::optional<PdsParams>& candidate, const SizeCaps& caps)
{
    PdsReport out;
    if (D.size() <= caps.bruteforce_set && D.group.size() <= caps.table_points) {
        out.method = "bruteforce";
        const auto found = verify_pds_bruteforce(D, caps);
        out.verified = found && (!candidate || *found == *candidate);
        if (found) out.params = *found;
        else if (candidate) out.params = *candidate;
        else {
            out.params.v = D.group.size();
            out.params.k = D.size();
        }
        return out;
    }
    if (!candidate) throw Error(ErrorCode::SizeGuard, "set too large for brute force and no candidate parameters given");
    out.method = "characters";
    out.params = *candidate;
    out.verified = verify_pds_characters(D, *candidate, caps);
    return out;
}

}  // namespace dbent
