#include "dbent/spectral.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>

#include "dbent/error.hpp"

namespace dbent {

PAryFunction::PAryFunction(Space d, std::vector<std::uint32_t> t) : domain(std::move(d)), table(std::move(t))
{
    if (table.size() != domain.size()) throw Error(ErrorCode::Schema, "table length must equal p^n");
    for (auto v : table)
        if (v >= domain.p()) throw Error(ErrorCode::Schema, "p-ary table entry out of range");
}

VectorialFunction::VectorialFunction(Space d, Field c, std::vector<std::uint32_t> t)
    : domain(std::move(d)), codomain(std::move(c)), table(std::move(t))
{
    if (codomain.p() != domain.p()) throw Error(ErrorCode::MixedPrime, "domain and codomain characteristics differ");
    if (table.size() != domain.size()) throw Error(ErrorCode::Schema, "table length must equal p^n");
    for (auto v : table)
        if (v >= codomain.size()) throw Error(ErrorCode::Schema, "table entry out of codomain range");
}

PAryFunction VectorialFunction::as_pary() const
{
    if (codomain.m() != 1) throw Error(ErrorCode::InvalidParameter, "codomain is not GF(p)");
    return PAryFunction(domain, table);
}

VectorialFunction VectorialFunction::from_pary(const PAryFunction& f)
{
    return VectorialFunction(f.domain, Field(f.domain.p(), 1), f.table);
}

CyclotomicInt WalshSpectrum::value(std::uint64_t a) const
{
    std::vector<BigInt> c(p - 1);
    const auto* r = row(a);
    for (std::uint32_t j = 0; j + 1 < p; ++j) c[j] = r[j];
    return CyclotomicInt(p, std::move(c));
}

namespace {

void check_transform_size(const Space& space, const SizeCaps& caps)
{
    if (space.size() > caps.transform_points)
        throw Error(ErrorCode::SizeGuard, "transform over " + std::to_string(space.size()) + " points exceeds cap " +
                                              std::to_string(caps.transform_points));
}

}  // namespace

WalshSpectrum character_transform(const Space& space, std::vector<std::int64_t> A, const SizeCaps& caps)
{
    check_transform_size(space, caps);
    const std::uint32_t p = space.p();
    const std::uint64_t N = space.size();
    if (A.size() != N * p) throw Error(ErrorCode::InvalidParameter, "weight array has wrong length");

    // One p-point transform per digit: out_b = sum_k in_k * ζ^{-bk}.
    std::vector<std::int64_t> in(static_cast<std::size_t>(p) * p);
    std::uint64_t stride = 1;
    for (std::uint32_t d = 0; d < space.n(); ++d, stride *= p) {
        for (std::uint64_t base = 0; base < N; base += stride * p) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const std::uint64_t x0 = base + off;
                for (std::uint32_t k = 0; k < p; ++k)
                    std::memcpy(&in[k * p], &A[(x0 + k * stride) * p], p * sizeof(std::int64_t));
                for (std::uint32_t b = 0; b < p; ++b) {
                    std::int64_t* out = &A[(x0 + b * stride) * p];
                    for (std::uint32_t j = 0; j < p; ++j) {
                        std::int64_t acc = 0;
                        std::uint32_t idx = j;  // (j + b k) mod p
                        for (std::uint32_t k = 0; k < p; ++k) {
                            acc += in[k * p + idx];
                            idx += b;
                            if (idx >= p) idx -= p;
                        }
                        out[j] = acc;
                    }
                }
            }
        }
    }

    WalshSpectrum w;
    w.p = p;
    w.coeffs.resize(N * (p - 1));
    const auto dual = space.dual_coordinate_table();
    for (std::uint64_t a = 0; a < N; ++a) {
        const std::int64_t* src = &A[dual[a] * p];
        std::int64_t* dst = &w.coeffs[a * (p - 1)];
        for (std::uint32_t j = 0; j + 1 < p; ++j) dst[j] = src[j] - src[p - 1];
    }
    return w;
}

WalshSpectrum walsh_full(const PAryFunction& f, const SizeCaps& caps)
{
    check_transform_size(f.domain, caps);
    const std::uint32_t p = f.domain.p();
    std::vector<std::int64_t> A(f.domain.size() * p, 0);
    for (std::uint64_t x = 0; x < f.table.size(); ++x) A[x * p + f.table[x]] = 1;
    return character_transform(f.domain, std::move(A), caps);
}

WalshSpectrum walsh_naive(const PAryFunction& f)
{
    const Space& V = f.domain;
    const std::uint32_t p = V.p();
    const std::uint64_t N = V.size();
    WalshSpectrum w;
    w.p = p;
    w.coeffs.resize(N * (p - 1));
    std::vector<std::int64_t> cnt(p);
    for (std::uint64_t a = 0; a < N; ++a) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (std::uint64_t x = 0; x < N; ++x) {
            const std::uint32_t ip = V.inner_product(Point{a}, Point{x});
            ++cnt[(f.table[x] + p - ip) % p];
        }
        for (std::uint32_t j = 0; j + 1 < p; ++j) w.coeffs[a * (p - 1) + j] = cnt[j] - cnt[p - 1];
    }
    return w;
}

namespace {

// |row|^2 as (integer part, flag that the product lies in Z).
std::pair<__int128, bool> norm128(const std::int64_t* r, std::uint32_t p)
{
    std::vector<__int128> full(p, 0);
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (!r[i]) continue;
        for (std::uint32_t j = 0; j + 1 < p; ++j) full[(i + p - j) % p] += static_cast<__int128>(r[i]) * r[j];
    }
    for (std::uint32_t k = 1; k + 1 < p; ++k)
        if (full[k] != full[p - 1]) return {0, false};
    return {full[0] - full[p - 1], true};
}

BigInt to_big(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

}  // namespace

std::optional<BigInt> row_norm(const WalshSpectrum& w, std::uint64_t a)
{
    auto [v, ok] = norm128(w.row(a), w.p);
    if (!ok) return std::nullopt;
    return to_big(v);
}

bool parseval_holds(const WalshSpectrum& w, std::uint32_t n)
{
    // Individual |W(a)|^2 need not be rational; only the sum is.
    const std::uint32_t p = w.p;
    std::vector<__int128> full(p, 0);
    for (std::uint64_t a = 0; a < w.size(); ++a) {
        const std::int64_t* r = w.row(a);
        for (std::uint32_t i = 0; i + 1 < p; ++i) {
            if (!r[i]) continue;
            for (std::uint32_t j = 0; j + 1 < p; ++j) full[(i + p - j) % p] += static_cast<__int128>(r[i]) * r[j];
        }
    }
    for (std::uint32_t k = 1; k + 1 < p; ++k)
        if (full[k] != full[p - 1]) return false;
    return to_big(full[0] - full[p - 1]) == pow(BigInt(p), 2 * n);
}

CyclotomicInt bent_unit(std::uint32_t p, std::uint32_t n)
{
    const BigInt half = pow(BigInt(p), n / 2);
    if (n % 2 == 0) return CyclotomicInt::integer(p, half);
    return gauss_sum(p).scaled(half);
}

BentClassification classify_spectrum(const Space& domain, const WalshSpectrum& w)
{
    const std::uint32_t p = w.p, n = domain.n();
    const std::uint64_t N = w.size();
    const std::uint32_t width = p - 1;

    // candidates[(j * 2) + (sign < 0)] = ±u ζ^j
    const CyclotomicInt unit = bent_unit(p, n);
    std::vector<std::int64_t> cand(2 * p * width);
    for (std::uint32_t j = 0; j < p; ++j) {
        const CyclotomicInt v = unit * CyclotomicInt::zeta_power(p, j);
        for (std::uint32_t i = 0; i < width; ++i) {
            const auto c = static_cast<std::int64_t>(v.coeffs()[i]);
            cand[(2 * j) * width + i] = c;
            cand[(2 * j + 1) * width + i] = -c;
        }
    }

    BentClassification out;
    std::vector<std::uint32_t> dual(N);
    out.signs.resize(N);
    for (std::uint64_t a = 0; a < N; ++a) {
        const std::int64_t* r = w.row(a);
        std::int32_t hit = -1;
        for (std::uint32_t c = 0; c < 2 * p; ++c) {
            if (std::memcmp(r, &cand[c * width], width * sizeof(std::int64_t)) == 0) {
                hit = static_cast<std::int32_t>(c);
                break;
            }
        }
        if (hit < 0) {
            auto [v, ok] = norm128(r, p);
            if (ok && to_big(v) == pow(BigInt(p), n))
                throw Error(ErrorCode::MatchFailure, "Walsh value of bent magnitude matches no candidate at a=" + std::to_string(a));
            return BentClassification{};
        }
        dual[a] = static_cast<std::uint32_t>(hit / 2);
        out.signs[a] = (hit % 2) ? -1 : 1;
    }
    out.is_bent = true;
    out.weakly_regular = std::all_of(out.signs.begin(), out.signs.end(), [&](std::int8_t s) { return s == out.signs[0]; });
    if (out.weakly_regular) {
        out.epsilon = out.signs[0];
        out.regular = out.epsilon == 1;
    }
    out.dual.emplace(domain, std::move(dual));
    return out;
}

BentClassification classify_bent(const PAryFunction& f, const SizeCaps& caps)
{
    return classify_spectrum(f.domain, walsh_full(f, caps));
}

PAryFunction component(const VectorialFunction& F, FieldElem c)
{
    if (c.rank == 0) throw Error(ErrorCode::ZeroComponent, "component index must be nonzero");
    const Field& K = F.codomain;
    if (c.rank >= K.size()) throw Error(ErrorCode::InvalidParameter, "component index out of range");
    std::vector<std::uint32_t> lut(K.size());
    for (std::uint64_t v = 0; v < K.size(); ++v) lut[v] = K.trace_to_prime(K.mul(c, FieldElem{static_cast<std::uint32_t>(v)}));
    std::vector<std::uint32_t> t(F.table.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = lut[F.table[x]];
    return PAryFunction(F.domain, std::move(t));
}

bool is_vectorial_bent(const VectorialFunction& F, const SizeCaps& caps)
{
    for (std::uint32_t c = 1; c < F.codomain.size(); ++c)
        if (!classify_bent(component(F, FieldElem{c}), caps).is_bent) return false;
    return true;
}

namespace {

struct TableHash {
    std::size_t operator()(const std::vector<std::uint32_t>& t) const noexcept
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : t) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::optional<DualBentCertificate> dual_bent_certificate(const VectorialFunction& F, const VectorialFunction& Fstar,
                                                         const SizeCaps& caps)
{
    if (!(F.domain == Fstar.domain) || !(F.codomain == Fstar.codomain))
        throw Error(ErrorCode::InvalidParameter, "function and candidate dual must share domain and codomain");
    const std::uint64_t q = F.codomain.size();
    if (q - 1 > caps.sigma_candidates) throw Error(ErrorCode::SizeGuard, "too many codomain elements for sigma search");

    std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint32_t>, TableHash> by_table;
    for (std::uint32_t d = 1; d < q; ++d) by_table[component(Fstar, FieldElem{d}).table].push_back(d);

    std::vector<std::uint32_t> sigma(q, 0);
    std::vector<int> eps(q, 0);
    std::vector<bool> used(q, false);
    bool ok = true;
    for (std::uint32_t c = 1; c < q; ++c) {
        const BentClassification cls = classify_bent(component(F, FieldElem{c}), caps);
        if (!cls.is_bent) throw Error(ErrorCode::NotBent, "component " + std::to_string(c) + " is not bent");
        eps[c] = cls.epsilon;
        if (!ok) continue;
        auto it = by_table.find(cls.dual->table);
        if (it == by_table.end() || it->second.size() != 1 || used[it->second.front()]) {
            ok = false;
            continue;
        }
        sigma[c] = it->second.front();
        used[sigma[c]] = true;
    }
    if (!ok) return std::nullopt;
    return DualBentCertificate{Fstar, std::move(sigma), std::move(eps)};
}

Anf anf(const PAryFunction& f)
{
    const std::uint32_t p = f.domain.p(), n = f.domain.n();
    const std::uint64_t N = f.domain.size();
    std::vector<std::uint32_t> c(f.table.begin(), f.table.end());
    // powtab[x][e] = x^e mod p, with 0^0 = 1
    std::vector<std::vector<std::uint32_t>> powtab(p, std::vector<std::uint32_t>(p, 1));
    for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t e = 1; e < p; ++e) powtab[x][e] = powtab[x][e - 1] * x % p;

    // Per variable: c_0 = g(0), c_k = -sum_x g(x) x^{p-1-k} for 1 <= k <= p-1.
    std::vector<std::uint32_t> g(p), h(p);
    std::uint64_t stride = 1;
    for (std::uint32_t d = 0; d < n; ++d, stride *= p) {
        for (std::uint64_t base = 0; base < N; base += stride * p) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const std::uint64_t x0 = base + off;
                for (std::uint32_t x = 0; x < p; ++x) g[x] = c[x0 + x * stride];
                h[0] = g[0];
                for (std::uint32_t k = 1; k < p; ++k) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t x = 0; x < p; ++x) acc += static_cast<std::uint64_t>(g[x]) * powtab[x][p - 1 - k];
                    h[k] = static_cast<std::uint32_t>((p - acc % p) % p);
                }
                for (std::uint32_t k = 0; k < p; ++k) c[x0 + k * stride] = h[k];
            }
        }
    }
    Anf out;
    for (std::uint64_t e = 0; e < N; ++e)
        if (c[e]) out.emplace(to_digits(e, p, n), c[e]);
    return out;
}

std::uint32_t anf_evaluate(const Anf& poly, std::uint32_t p, const std::vector<std::uint32_t>& coords)
{
    std::uint64_t acc = 0;
    for (const auto& [exps, coef] : poly) {
        std::uint64_t term = coef;
        for (std::size_t i = 0; i < exps.size() && term; ++i)
            for (std::uint32_t e = 0; e < exps[i]; ++e) term = term * coords.at(i) % p;
        acc += term;
    }
    return static_cast<std::uint32_t>(acc % p);
}

std::vector<std::uint32_t> lform_exponents(const PAryFunction& f)
{
    const std::uint32_t p = f.domain.p();
    const std::uint64_t N = f.domain.size();
    std::vector<bool> alive(p, true);
    alive[0] = false;
    for (std::uint32_t a = 2; a < p; ++a) {
        std::vector<std::uint32_t> apow(p);
        apow[0] = 1;
        for (std::uint32_t l = 1; l < p; ++l) apow[l] = apow[l - 1] * a % p;
        for (std::uint64_t x = 0; x < N; ++x) {
            const std::uint32_t lhs = f.table[f.domain.scalar_mul(a, Point{x}).rank];
            for (std::uint32_t l = 1; l < p; ++l)
                if (alive[l] && lhs != apow[l] * f.table[x] % p) alive[l] = false;
        }
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t l = 1; l < p; ++l)
        if (alive[l]) out.push_back(l);
    return out;
}

LformReport check_lform_converse(const PAryFunction& f, const SizeCaps& caps)
{
    if (f.table[0] != 0) throw Error(ErrorCode::PreconditionF0, "f(0) must be 0");
    LformReport rep;
    const BentClassification cls = classify_bent(f, caps);
    if (!cls.is_bent) {
        rep.reason = "not bent";
        return rep;
    }
    if (!cls.weakly_regular) {
        rep.reason = "not weakly regular";
        return rep;
    }
    rep.epsilon = cls.epsilon;
    // Any vectorial dual G satisfies f* = G_{sigma(1)}, so G and f* have the
    // same components and f* itself is a complete candidate.
    const VectorialFunction F = VectorialFunction::from_pary(f);
    const VectorialFunction G = VectorialFunction::from_pary(*cls.dual);
    if (!is_vectorial_bent(G, caps)) {
        rep.reason = "dual is not bent";
        return rep;
    }
    for (std::uint32_t c = 1; c < f.domain.p(); ++c) {
        if (!classify_bent(component(F, FieldElem{c}), caps).weakly_regular) {
            rep.reason = "a multiple of f is not weakly regular";
            return rep;
        }
    }
    if (!dual_bent_certificate(F, G, caps)) {
        rep.reason = "not vectorial dual-bent";
        return rep;
    }
    rep.lforms = lform_exponents(f);
    const std::uint32_t p = f.domain.p();
    for (auto l : rep.lforms) {
        if (std::gcd(l - 1, p - 1) == 1) {
            rep.exponent = l;
            break;
        }
    }
    rep.status = rep.exponent ? LformReport::Status::Confirmed : LformReport::Status::Counterexample;
    rep.reason = rep.exponent ? "l-form exponent found" : "weakly regular dual-bent but no admissible l-form exponent";
    return rep;
}

}  // namespace dbent
