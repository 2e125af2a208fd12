#include "dbent/constructions.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "dbent/error.hpp"

namespace dbent {

namespace {

void check_table_size(std::uint64_t points)
{
    if (points > default_caps().table_points)
        throw Error(ErrorCode::SizeGuard, "function table of " + std::to_string(points) + " points exceeds cap");
}

void require_divides(std::uint32_t k, std::uint32_t m)
{
    if (k == 0 || m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(m));
}

void require_nonzero(FieldElem a, const Field& F, const char* what)
{
    if (a.rank >= F.size()) throw Error(ErrorCode::InvalidParameter, std::string(what) + " out of range");
    if (a.rank == 0) throw Error(ErrorCode::ZeroArgument, std::string(what) + " must be nonzero");
}

// e^{-1} mod n, assuming gcd(e, n) = 1.
std::int64_t inverse_mod(std::int64_t e, std::int64_t n)
{
    std::int64_t r0 = n, r1 = ((e % n) + n) % n, t0 = 0, t1 = 1;
    while (r1) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return ((t0 % n) + n) % n;
}

std::vector<std::uint32_t> inverse_sigma(const Field& K)
{
    std::vector<std::uint32_t> sigma(K.size(), 0);
    for (std::uint32_t c = 1; c < K.size(); ++c) sigma[c] = K.inv(FieldElem{c}).rank;
    return sigma;
}

// +1 for every nonzero c, entry 0 unused
std::vector<int> unit_signs(std::uint64_t q)
{
    std::vector<int> eps(q, 1);
    eps[0] = 0;
    return eps;
}

// 0 for zero, 1 for squares, 2 for non-squares.
int square_class(const Field& K, FieldElem t)
{
    if (t.rank == 0) return 0;
    return K.is_square(t) ? 1 : 2;
}

}  // namespace

int normalized_sign(std::uint32_t p, bool flip, std::uint32_t K, int eta)
{
    int sign = flip ? -eta : eta;
    // ε^K / ε^{K mod 2} = (sqrt(-1))^{K - (K mod 2)} when p ≡ 3 (mod 4)
    if (p % 4 == 3 && ((K - K % 2) / 2) % 2 == 1) sign = -sign;
    return sign;
}

FieldElem QPolynomial::operator()(const Field& F, FieldElem x) const
{
    FieldElem acc = F.zero(), frob = x;
    const auto q = static_cast<std::int64_t>(ipow(F.p(), s));
    for (const auto& c : coeffs) {
        acc = F.add(acc, F.mul(c, frob));
        frob = F.pow(frob, q);
    }
    return acc;
}

std::vector<std::uint32_t> QPolynomial::permutation_table(const Field& F) const
{
    require_divides(s, F.m());
    for (const auto& c : coeffs)
        if (c.rank >= F.size()) throw Error(ErrorCode::InvalidParameter, "q-polynomial coefficient out of range");
    std::vector<std::uint32_t> t(F.size());
    std::vector<bool> hit(F.size(), false);
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        t[x] = (*this)(F, FieldElem{x}).rank;
        if (hit[t[x]]) throw Error(ErrorCode::NotPermutation, "q-polynomial is not a permutation");
        hit[t[x]] = true;
    }
    return t;
}

Construction mm_power(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem a, std::uint64_t e)
{
    require_divides(s, m);
    const Field F(p, m);
    const Field& K = F.subfield(s);
    require_nonzero(a, F, "a");
    const std::uint64_t q = F.size();
    if (e == 0 || std::gcd(e, q - 1) != 1) throw Error(ErrorCode::BadExponent, "gcd(e, p^m - 1) must be 1");
    const std::int64_t u = inverse_mod(static_cast<std::int64_t>(e % (q - 1)), static_cast<std::int64_t>(q - 1));
    const Space V({F, F});
    check_table_size(V.size());

    const FieldElem coef = F.neg(F.pow(a, -u));
    std::vector<std::uint32_t> ye(q), xu(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        ye[x] = F.pow(FieldElem{x}, static_cast<std::int64_t>(e)).rank;
        xu[x] = F.pow(FieldElem{x}, u).rank;
    }
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            t[x + q * y] = F.trace(s, F.mul(a, F.mul(FieldElem{x}, FieldElem{ye[y]}))).rank;
            ts[x + q * y] = F.trace(s, F.mul(coef, F.mul(FieldElem{xu[x]}, FieldElem{y}))).rank;
        }
    }
    std::vector<std::uint32_t> sigma(K.size(), 0);
    for (std::uint32_t c = 1; c < K.size(); ++c) sigma[c] = K.pow(FieldElem{c}, -u).rank;
    return Construction{"mm-power", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        std::move(sigma), unit_signs(K.size())};
}

Construction mm_qpoly(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem a, const QPolynomial& L)
{
    require_divides(s, m);
    if (L.s != s) throw Error(ErrorCode::InvalidParameter, "q-polynomial must be over q = p^s");
    const Field F(p, m);
    const Field& K = F.subfield(s);
    require_nonzero(a, F, "a");
    const auto Lt = L.permutation_table(F);
    std::vector<std::uint32_t> Linv(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) Linv[Lt[x]] = x;
    const Space V({F, F});
    check_table_size(V.size());
    const std::uint64_t q = F.size();
    const FieldElem ainv = F.inv(a);
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            t[x + q * y] = F.trace(s, F.mul(a, F.mul(FieldElem{x}, FieldElem{Lt[y]}))).rank;
            const FieldElem z{Linv[F.mul(ainv, FieldElem{x}).rank]};
            ts[x + q * y] = F.trace(s, F.neg(F.mul(z, FieldElem{y}))).rank;
        }
    }
    return Construction{"mm-qpoly", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        inverse_sigma(K), unit_signs(K.size())};
}

Construction quad_trace(std::uint32_t p, std::uint32_t n, std::uint32_t s, FieldElem a)
{
    require_divides(s, n);
    const Field F(p, n);
    const Field& K = F.subfield(s);
    require_nonzero(a, F, "a");
    const Space V({F});
    check_table_size(V.size());
    const FieldElem coef = F.neg(F.inv(F.mul(F.constant(4), a)));
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        const FieldElem x2 = F.mul(FieldElem{x}, FieldElem{x});
        t[x] = F.trace(s, F.mul(a, x2)).rank;
        ts[x] = F.trace(s, F.mul(coef, x2)).rank;
    }
    std::vector<int> eps(K.size(), 0);
    for (std::uint32_t c = 1; c < K.size(); ++c)
        eps[c] = normalized_sign(p, (n - 1) % 2 == 1, n, F.quadratic_character(F.mul(a, F.embed(s, FieldElem{c}))));
    return Construction{"quad-trace", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        inverse_sigma(K), std::move(eps)};
}

Construction diag_quad(std::uint32_t p, std::uint32_t s, const std::vector<FieldElem>& a)
{
    if (a.empty()) throw Error(ErrorCode::InvalidParameter, "need at least one coefficient");
    const Field K(p, s);
    for (const auto& ai : a) {
        if (ai.rank >= K.size()) throw Error(ErrorCode::InvalidParameter, "coefficient out of range");
        if (ai.rank == 0) throw Error(ErrorCode::ZeroCoefficient, "diagonal coefficients must be nonzero");
    }
    const auto m = static_cast<std::uint32_t>(a.size());
    const Space V(std::vector<Field>(m, K));
    check_table_size(V.size());
    const std::uint64_t q = K.size();
    // per-coordinate contributions a_i x^2 and -x^2 / (4 a_i)
    std::vector<std::vector<std::uint32_t>> sq(m, std::vector<std::uint32_t>(q)), sqs(m, std::vector<std::uint32_t>(q));
    for (std::uint32_t i = 0; i < m; ++i) {
        const FieldElem coef = K.neg(K.inv(K.mul(K.constant(4), a[i])));
        for (std::uint32_t x = 0; x < q; ++x) {
            const FieldElem x2 = K.mul(FieldElem{x}, FieldElem{x});
            sq[i][x] = K.mul(a[i], x2).rank;
            sqs[i][x] = K.mul(coef, x2).rank;
        }
    }
    const DigitArith& add = K.digits();
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    for (std::uint64_t r = 0; r < V.size(); ++r) {
        std::uint64_t rest = r, acc = 0, accs = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            const auto xi = static_cast<std::uint32_t>(rest % q);
            rest /= q;
            acc = add.add(acc, sq[i][xi]);
            accs = add.add(accs, sqs[i][xi]);
        }
        t[r] = static_cast<std::uint32_t>(acc);
        ts[r] = static_cast<std::uint32_t>(accs);
    }
    FieldElem prod = K.one();
    for (const auto& ai : a) prod = K.mul(prod, ai);
    std::vector<int> eps(q, 0);
    for (std::uint32_t c = 1; c < q; ++c)
        eps[c] = normalized_sign(p, ((s - 1) * m) % 2 == 1, s * m, K.quadratic_character(K.mul(K.pow(FieldElem{c}, m), prod)));
    return Construction{"diag-quad", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        inverse_sigma(K), std::move(eps)};
}

std::uint64_t RegularSpread::member(FieldElem x, FieldElem y) const
{
    if (x.rank == 0) return 0;
    return static_cast<std::uint64_t>(field.div(y, x).rank) + 1;
}

std::uint64_t RegularSpread::complement(std::uint64_t i) const
{
    if (i == 0) return 1;
    if (i == 1) return 0;
    const FieldElem a{static_cast<std::uint32_t>(i - 1)};
    return static_cast<std::uint64_t>(field.neg(field.inv(a)).rank) + 1;
}

std::vector<FieldElem> default_spread_labels(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem gamma0)
{
    const std::uint64_t qm = ipow(p, m), qs = ipow(p, s);
    std::vector<FieldElem> labels(qm + 1);
    labels[0] = gamma0;
    for (std::uint64_t i = 1; i <= qm; ++i) labels[i] = FieldElem{static_cast<std::uint32_t>((i - 1) % qs)};
    return labels;
}

Construction spread_bent(std::uint32_t p, std::uint32_t m, std::uint32_t s, const std::vector<FieldElem>& labels)
{
    if (s == 0 || s > m) throw Error(ErrorCode::InvalidParameter, "need 1 <= s <= m");
    const Field F(p, m);
    const Field K(p, s);
    const RegularSpread spread(F);
    if (labels.size() != spread.count()) throw Error(ErrorCode::InvalidParameter, "need p^m + 1 labels");
    std::vector<std::uint64_t> count(K.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].rank >= K.size()) throw Error(ErrorCode::InvalidParameter, "label out of range");
        if (i > 0) ++count[labels[i].rank];
    }
    for (auto c : count)
        if (c != ipow(p, m - s)) throw Error(ErrorCode::UnbalancedLabeling, "labels on U_1..U_{p^m} must be balanced");

    const Space V({F, F});
    check_table_size(V.size());
    const std::uint64_t q = F.size();
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            const std::uint64_t j = spread.member(FieldElem{x}, FieldElem{y});
            t[x + q * y] = labels[j].rank;
            ts[x + q * y] = (x == 0 && y == 0) ? labels[0].rank : labels[spread.complement(j)].rank;
        }
    }
    std::vector<std::uint32_t> sigma(K.size());
    std::iota(sigma.begin(), sigma.end(), 0u);
    return Construction{"spread", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        std::move(sigma), unit_signs(K.size())};
}

Construction switched_quadratic(std::uint32_t p, const SwitchedQuadraticParams& prm)
{
    require_divides(prm.s, prm.n);
    require_divides(prm.s, prm.m);
    const Field Fn(p, prm.n), Fm(p, prm.m);
    const Field& K = Fm.subfield(prm.s);
    require_nonzero(prm.alpha1, Fn, "alpha1");
    require_nonzero(prm.alpha2, Fn, "alpha2");
    require_nonzero(prm.alpha3, Fn, "alpha3");
    require_nonzero(prm.beta, Fm, "beta");
    require_nonzero(prm.gamma, Fm, "gamma");
    const QPolynomial L = prm.L.value_or(QPolynomial::identity(prm.s));
    if (L.s != prm.s) throw Error(ErrorCode::InvalidParameter, "q-polynomial must be over q = p^s");
    const auto Lt = L.permutation_table(Fm);
    std::vector<std::uint32_t> Linv(Fm.size());
    for (std::uint32_t x = 0; x < Fm.size(); ++x) Linv[Lt[x]] = x;

    const Space V({Fn, Fm, Fm});
    check_table_size(V.size());
    const std::uint64_t qn = Fn.size(), qm = Fm.size();
    const FieldElem alpha[3] = {prm.alpha1, prm.alpha2, prm.alpha3};

    // F_j and R_j on GF(p^n), j indexed by square class
    std::vector<std::uint32_t> Fj[3], Rj[3];
    for (int j = 0; j < 3; ++j) {
        Fj[j].resize(qn);
        Rj[j].resize(qn);
        const FieldElem rc = Fn.neg(Fn.inv(Fn.mul(Fn.constant(4), alpha[j])));
        for (std::uint32_t x = 0; x < qn; ++x) {
            const FieldElem x2 = Fn.mul(FieldElem{x}, FieldElem{x});
            Fj[j][x] = Fn.trace(prm.s, Fn.mul(alpha[j], x2)).rank;
            Rj[j][x] = Fn.trace(prm.s, Fn.mul(rc, x2)).rank;
        }
    }
    const FieldElem binv = Fm.inv(prm.beta);
    std::vector<int> cls_h(qm), cls_d(qm);  // square class of Tr(γ y2^2), resp. Tr(γ z1^2)
    std::vector<std::uint32_t> z1(qm);
    for (std::uint32_t y = 0; y < qm; ++y) {
        const FieldElem yy{y};
        cls_h[y] = square_class(K, Fm.trace(prm.s, Fm.mul(prm.gamma, Fm.mul(yy, yy))));
        z1[y] = Linv[Fm.mul(binv, yy).rank];
        const FieldElem z{z1[y]};
        cls_d[y] = square_class(K, Fm.trace(prm.s, Fm.mul(prm.gamma, Fm.mul(z, z))));
    }
    const DigitArith& add = K.digits();
    std::vector<std::uint32_t> t(V.size()), ts(V.size());
    std::vector<std::uint32_t> g(qm), gs(qm);
    for (std::uint32_t y2 = 0; y2 < qm; ++y2) {
        for (std::uint32_t y1 = 0; y1 < qm; ++y1) {
            g[y1] = Fm.trace(prm.s, Fm.mul(prm.beta, Fm.mul(FieldElem{y1}, FieldElem{Lt[y2]}))).rank;
            gs[y1] = Fm.trace(prm.s, Fm.neg(Fm.mul(FieldElem{z1[y1]}, FieldElem{y2}))).rank;
        }
        const auto& fh = Fj[cls_h[y2]];
        for (std::uint32_t y1 = 0; y1 < qm; ++y1) {
            const auto& fd = Rj[cls_d[y1]];
            const std::uint64_t base = qn * (y1 + qm * y2);
            for (std::uint32_t x = 0; x < qn; ++x) {
                t[base + x] = static_cast<std::uint32_t>(add.add(fh[x], g[y1]));
                ts[base + x] = static_cast<std::uint32_t>(add.add(fd[x], gs[y1]));
            }
        }
    }

    std::optional<std::vector<int>> eps;
    const int e1 = Fn.quadratic_character(prm.alpha1);
    if (Fn.quadratic_character(prm.alpha2) == e1 && Fn.quadratic_character(prm.alpha3) == e1) {
        eps.emplace(K.size(), 0);
        for (std::uint32_t c = 1; c < K.size(); ++c)
            (*eps)[c] = normalized_sign(p, (prm.n - 1) % 2 == 1, prm.n,
                                        Fn.quadratic_character(Fn.mul(prm.alpha1, Fn.embed(prm.s, FieldElem{c}))));
    }
    return Construction{"switched-quadratic", VectorialFunction(V, K, std::move(t)), VectorialFunction(V, K, std::move(ts)),
                        inverse_sigma(K), std::move(eps)};
}

}  // namespace dbent
