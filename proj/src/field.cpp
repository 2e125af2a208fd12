#include "dbent/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "dbent/error.hpp"

namespace dbent {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1ULL << 32;
constexpr std::uint64_t kTableThreshold = 1ULL << 22;

using Poly = std::vector<std::uint32_t>;  // coefficients, constant first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p), b monic.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p)
{
    const std::size_t db = b.size() - 1;
    trim(a);
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic)
{
    const std::size_t m = monic.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t r = 0; r < count; ++r) {
            Poly div = to_digits(r, p, static_cast<std::uint32_t>(d));
            div.push_back(1);
            if (poly_mod(monic, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m)
{
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t r = 0; r < count; ++r) {
        Poly cand = to_digits(r, p, m);
        cand.push_back(1);
        if (is_irreducible(p, cand)) return cand;
    }
    throw Error(ErrorCode::InvalidField, "no irreducible polynomial found");
}

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    Poly modulus;
    DigitArith digits;
    bool tables = false;
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // length q, log[0] unused
    std::uint32_t primitive = 1;
    std::vector<std::uint64_t> order_factors;  // prime factors of q-1
    std::vector<std::uint32_t> trace_basis;    // Tr_1^m(x^j)

    struct Sub {
        std::uint32_t k;
        Field field;
        std::vector<std::uint32_t> embed;
        std::unordered_map<std::uint32_t, std::uint32_t> project;
        std::vector<std::uint32_t> trace_basis;  // Tr_k^m(x^j), ranks in `field`
    };
    std::vector<Sub> subs;

    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const
    {
        if (a == 0 || b == 0) return 0;
        const auto da = to_digits(a, p, m), db = to_digits(b, p, m);
        Poly prod(2 * m - 1, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
        }
        Poly r = poly_mod(std::move(prod), modulus, p);
        r.resize(m, 0);
        return static_cast<std::uint32_t>(from_digits(r, p));
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (a == 0 || b == 0) return 0;
        if (tables) return exp[log[a] + log[b]];
        return mul_poly(a, b);
    }

    std::uint32_t pow_poly(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (tables) return exp[static_cast<std::uint64_t>(log[a]) * (e % (q - 1)) % (q - 1)];
        return pow_poly(a, e);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(digits.add(a, b)); }
};

namespace {

std::shared_ptr<Field::Impl> build_core(std::uint32_t p, Poly modulus)
{
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic must be an odd prime, got " + std::to_string(p));
    if (modulus.size() < 2) throw Error(ErrorCode::InvalidField, "modulus must have degree >= 1");
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    if (modulus.back() != 1) throw Error(ErrorCode::InvalidField, "modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
    long double size = 1;
    for (std::uint32_t i = 0; i < m; ++i) size *= p;
    if (size > static_cast<long double>(kMaxFieldSize)) throw Error(ErrorCode::SizeGuard, "field size p^m exceeds 2^32");
    if (!is_irreducible(p, modulus)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible");

    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = ipow(p, m);
    impl->modulus = std::move(modulus);
    impl->digits = DigitArith(p, m);
    impl->order_factors = prime_factors(impl->q - 1);

    const std::uint64_t q1 = impl->q - 1;
    for (std::uint32_t g = 1; g < impl->q; ++g) {
        bool primitive = true;
        for (auto f : impl->order_factors) {
            if (impl->pow_poly(g, q1 / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            impl->primitive = g;
            break;
        }
    }

    if (impl->q <= kTableThreshold) {
        impl->tables = true;
        impl->exp.resize(2 * q1);
        impl->log.assign(impl->q, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < q1; ++i) {
            impl->exp[i] = x;
            impl->exp[i + q1] = x;
            impl->log[x] = static_cast<std::uint32_t>(i);
            x = impl->mul_poly(x, impl->primitive);
        }
    }

    impl->trace_basis.resize(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        const auto xj = static_cast<std::uint32_t>(ipow(p, j));
        std::uint32_t acc = 0, conj = xj;
        for (std::uint32_t i = 0; i < m; ++i) {
            acc = impl->add(acc, conj);
            conj = impl->pow(conj, p);
        }
        if (acc >= p) throw Error(ErrorCode::InvalidField, "trace left the prime field");
        impl->trace_basis[j] = acc;
    }
    return impl;
}

}  // namespace

static std::shared_ptr<const Field::Impl> build(std::uint32_t p, Poly modulus)
{
    auto impl = build_core(p, std::move(modulus));
    const std::uint32_t m = impl->m;
    for (std::uint32_t k = 1; k < m; ++k) {
        if (m % k) continue;
        Field sub(p, k);
        const Poly& smod = sub.modulus();
        auto eval = [&](std::uint32_t x) {
            std::uint32_t acc = 0;
            for (auto it = smod.rbegin(); it != smod.rend(); ++it) acc = impl->add(impl->mul(acc, x), *it);
            return acc;
        };
        std::uint32_t theta = 0;
        bool found = eval(0) == 0;  // degree-1 subfield modulus x
        if (!found) {
            // roots lie in the fixed set of x -> x^{p^k}, the subgroup generated by g^step
            const std::uint64_t step = (impl->q - 1) / (ipow(p, k) - 1);
            const std::uint32_t h = impl->pow(impl->primitive, step);
            std::uint32_t x = 1;
            for (std::uint64_t i = 0; i + 1 < ipow(p, k); ++i, x = impl->mul(x, h)) {
                if (eval(x) == 0 && (!found || x < theta)) {
                    theta = x;
                    found = true;
                }
            }
        }
        if (!found) throw Error(ErrorCode::InvalidField, "subfield modulus has no root");

        Field::Impl::Sub link{k, sub, {}, {}, {}};
        const std::uint64_t qs = sub.size();
        std::vector<std::uint32_t> theta_pow(k, 1);
        for (std::uint32_t i = 1; i < k; ++i) theta_pow[i] = impl->mul(theta_pow[i - 1], theta);
        link.embed.resize(qs);
        for (std::uint64_t r = 0; r < qs; ++r) {
            const auto d = to_digits(r, p, k);
            std::uint64_t acc = 0;
            for (std::uint32_t i = 0; i < k; ++i) acc = impl->digits.add(acc, impl->digits.scale(d[i], theta_pow[i]));
            link.embed[r] = static_cast<std::uint32_t>(acc);
            link.project.emplace(static_cast<std::uint32_t>(acc), static_cast<std::uint32_t>(r));
        }
        link.trace_basis.resize(m);
        for (std::uint32_t j = 0; j < m; ++j) {
            std::uint32_t acc = 0, conj = static_cast<std::uint32_t>(ipow(p, j));
            const auto frob = ipow(p, k);
            for (std::uint32_t i = 0; i < m / k; ++i) {
                acc = impl->add(acc, conj);
                conj = impl->pow(conj, frob);
            }
            auto it = link.project.find(acc);
            if (it == link.project.end()) throw Error(ErrorCode::InvalidField, "trace image outside subfield");
            link.trace_basis[j] = it->second;
        }
        impl->subs.push_back(std::move(link));
    }
    return impl;
}

Field::Field(std::uint32_t p, std::uint32_t m)
{
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw Error(ErrorCode::InvalidField, "extension degree must be >= 1");
    long double size = 1;
    for (std::uint32_t i = 0; i < m; ++i) size *= p;
    if (size > static_cast<long double>(kMaxFieldSize)) throw Error(ErrorCode::SizeGuard, "field size p^m exceeds 2^32");
    impl_ = build(p, smallest_irreducible(p, m));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus) : impl_(build(p, std::move(modulus))) {}

std::uint32_t Field::p() const noexcept { return impl_->p; }
std::uint32_t Field::m() const noexcept { return impl_->m; }
std::uint64_t Field::size() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
const DigitArith& Field::digits() const noexcept { return impl_->digits; }

bool operator==(const Field& a, const Field& b) noexcept
{
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

FieldElem Field::elem(std::uint64_t rank) const
{
    if (rank >= impl_->q) throw Error(ErrorCode::InvalidParameter, "element rank " + std::to_string(rank) + " out of range");
    return FieldElem{static_cast<std::uint32_t>(rank)};
}

FieldElem Field::constant(std::int64_t c) const noexcept
{
    const auto p = static_cast<std::int64_t>(impl_->p);
    return FieldElem{static_cast<std::uint32_t>(((c % p) + p) % p)};
}

FieldElem Field::add(FieldElem a, FieldElem b) const { return FieldElem{impl_->add(a.rank, b.rank)}; }
FieldElem Field::sub(FieldElem a, FieldElem b) const { return FieldElem{static_cast<std::uint32_t>(impl_->digits.sub(a.rank, b.rank))}; }
FieldElem Field::neg(FieldElem a) const { return FieldElem{static_cast<std::uint32_t>(impl_->digits.neg(a.rank))}; }
FieldElem Field::mul(FieldElem a, FieldElem b) const { return FieldElem{impl_->mul(a.rank, b.rank)}; }
FieldElem Field::mul_poly(FieldElem a, FieldElem b) const { return FieldElem{impl_->mul_poly(a.rank, b.rank)}; }

FieldElem Field::inv(FieldElem a) const
{
    if (a.rank == 0) throw Error(ErrorCode::InverseOfZero, "inverse of zero");
    return FieldElem{impl_->pow(a.rank, impl_->q - 2)};
}

FieldElem Field::pow(FieldElem a, std::int64_t e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    return FieldElem{impl_->pow(a.rank, static_cast<std::uint64_t>(e))};
}

std::uint32_t Field::trace_to_prime(FieldElem a) const
{
    std::uint64_t acc = 0, r = a.rank;
    for (std::uint32_t j = 0; j < impl_->m; ++j) {
        acc += (r % impl_->p) * impl_->trace_basis[j];
        r /= impl_->p;
    }
    return static_cast<std::uint32_t>(acc % impl_->p);
}

const Field& Field::subfield(std::uint32_t k) const
{
    if (k == 0 || impl_->m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(impl_->m));
    if (k == impl_->m) return *this;
    for (const auto& s : impl_->subs)
        if (s.k == k) return s.field;
    throw Error(ErrorCode::NotADivisor, "subfield missing");
}

FieldElem Field::trace(std::uint32_t k, FieldElem a) const
{
    if (k == 0 || impl_->m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(impl_->m));
    if (k == impl_->m) return a;
    for (const auto& s : impl_->subs) {
        if (s.k != k) continue;
        const auto& sd = s.field.digits();
        std::uint64_t acc = 0, r = a.rank;
        for (std::uint32_t j = 0; j < impl_->m; ++j) {
            const auto d = static_cast<std::uint32_t>(r % impl_->p);
            r /= impl_->p;
            if (d) acc = sd.add(acc, sd.scale(d, s.trace_basis[j]));
        }
        return FieldElem{static_cast<std::uint32_t>(acc)};
    }
    throw Error(ErrorCode::NotADivisor, "subfield missing");
}

FieldElem Field::embed(std::uint32_t k, FieldElem small) const
{
    if (k == 0 || impl_->m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(impl_->m));
    if (k == impl_->m) return small;
    for (const auto& s : impl_->subs)
        if (s.k == k) {
            if (small.rank >= s.embed.size()) throw Error(ErrorCode::InvalidParameter, "subfield element out of range");
            return FieldElem{s.embed[small.rank]};
        }
    throw Error(ErrorCode::NotADivisor, "subfield missing");
}

FieldElem Field::project(std::uint32_t k, FieldElem big) const
{
    if (k == 0 || impl_->m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(impl_->m));
    if (k == impl_->m) return big;
    for (const auto& s : impl_->subs)
        if (s.k == k) {
            auto it = s.project.find(big.rank);
            if (it == s.project.end()) throw Error(ErrorCode::InvalidParameter, "element not in subfield");
            return FieldElem{it->second};
        }
    throw Error(ErrorCode::NotADivisor, "subfield missing");
}

bool Field::in_subfield(std::uint32_t k, FieldElem a) const
{
    if (k == 0 || impl_->m % k) throw Error(ErrorCode::NotADivisor, std::to_string(k) + " does not divide " + std::to_string(impl_->m));
    return impl_->pow(a.rank, ipow(impl_->p, k)) == a.rank;
}

int Field::quadratic_character(FieldElem a) const
{
    if (a.rank == 0) throw Error(ErrorCode::ZeroArgument, "quadratic character of zero");
    if (impl_->tables) return impl_->log[a.rank] % 2 == 0 ? 1 : -1;
    return impl_->pow(a.rank, (impl_->q - 1) / 2) == 1 ? 1 : -1;
}

FieldElem Field::primitive_element() const noexcept { return FieldElem{impl_->primitive}; }

std::uint64_t Field::log(FieldElem a) const
{
    if (a.rank == 0) throw Error(ErrorCode::ZeroArgument, "logarithm of zero");
    if (impl_->tables) return impl_->log[a.rank];
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < impl_->q - 1; ++i) {
        if (x == a.rank) return i;
        x = impl_->mul_poly(x, impl_->primitive);
    }
    throw Error(ErrorCode::InvalidParameter, "logarithm not found");
}

std::uint64_t Field::order(FieldElem a) const
{
    if (a.rank == 0) throw Error(ErrorCode::ZeroArgument, "order of zero");
    std::uint64_t ord = impl_->q - 1;
    for (auto f : impl_->order_factors) {
        while (ord % f == 0 && impl_->pow(a.rank, ord / f) == 1) ord /= f;
    }
    return ord;
}

bool CosetSet::contains(FieldElem a) const { return std::binary_search(members.begin(), members.end(), a.rank); }

CosetSet Field::subgroup_coset(std::uint64_t exponent, FieldElem beta) const
{
    if (beta.rank == 0) throw Error(ErrorCode::ZeroBeta, "coset representative must be nonzero");
    if (exponent == 0) throw Error(ErrorCode::InvalidParameter, "exponent must be positive");
    CosetSet out;
    out.exponent = static_cast<std::uint32_t>(exponent);
    out.beta = beta;
    const std::uint64_t q1 = impl_->q - 1;
    const std::uint64_t d = std::gcd(exponent, q1);
    const std::uint32_t gd = impl_->pow(impl_->primitive, d);
    std::uint32_t x = beta.rank;
    out.members.reserve(q1 / d);
    for (std::uint64_t i = 0; i < q1 / d; ++i) {
        out.members.push_back(x);
        x = impl_->mul(x, gd);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace dbent
