#include "dbent/cyclo.hpp"

#include <sstream>

#include "dbent/error.hpp"
#include "dbent/field.hpp"

namespace dbent {

namespace {

std::uint32_t mod_p(std::int64_t j, std::uint32_t p)
{
    const auto pp = static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(((j % pp) + pp) % pp);
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), c_(p - 1)
{
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParameter, "cyclotomic ring needs an odd prime");
}

CyclotomicInt::CyclotomicInt(std::uint32_t p, std::vector<BigInt> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParameter, "cyclotomic ring needs an odd prime");
    if (c_.size() != p - 1) throw Error(ErrorCode::Schema, "cyclotomic integer needs p-1 coefficients");
}

CyclotomicInt CyclotomicInt::integer(std::uint32_t p, const BigInt& value)
{
    CyclotomicInt r(p);
    r.c_[0] = value;
    return r;
}

CyclotomicInt CyclotomicInt::zeta_power(std::uint32_t p, std::int64_t j)
{
    std::vector<BigInt> full(p);
    full[mod_p(j, p)] = 1;
    return from_full(p, full);
}

CyclotomicInt CyclotomicInt::from_full(std::uint32_t p, const std::vector<BigInt>& full)
{
    if (full.size() != p) throw Error(ErrorCode::InvalidParameter, "expected p coefficients");
    CyclotomicInt r(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) r.c_[i] = full[i] - full[p - 1];
    return r;
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const
{
    if (p_ != o.p_) throw Error(ErrorCode::MixedPrime, "cyclotomic operands over different primes");
}

bool CyclotomicInt::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

std::optional<BigInt> CyclotomicInt::as_integer() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const
{
    check_same(o);
    CyclotomicInt r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const
{
    check_same(o);
    CyclotomicInt r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const
{
    CyclotomicInt r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const
{
    check_same(o);
    std::vector<BigInt> full(p_);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint32_t j = 0; j + 1 < p_; ++j) {
            if (o.c_[j] == 0) continue;
            full[(i + j) % p_] += c_[i] * o.c_[j];
        }
    }
    return from_full(p_, full);
}

CyclotomicInt CyclotomicInt::scaled(const BigInt& k) const
{
    CyclotomicInt r(*this);
    for (auto& c : r.c_) c *= k;
    return r;
}

std::optional<CyclotomicInt> CyclotomicInt::divide_exact(const BigInt& k) const
{
    if (k == 0) throw Error(ErrorCode::ZeroArgument, "division by zero");
    // The canonical basis is a Z-basis, so divisibility is coefficientwise.
    CyclotomicInt r(*this);
    for (auto& c : r.c_) {
        if (c % k != 0) return std::nullopt;
        c /= k;
    }
    return r;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

std::string CyclotomicInt::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0) os << "-";
        first = false;
        const BigInt mag = abs(c_[i]);
        if (i == 0) os << mag;
        else {
            if (mag != 1) os << mag << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicInt automorphism(std::uint32_t beta, const CyclotomicInt& a)
{
    const std::uint32_t p = a.p();
    if (beta % p == 0) throw Error(ErrorCode::BetaZero, "automorphism index must be nonzero mod p");
    std::vector<BigInt> full(p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) full[(static_cast<std::uint64_t>(i) * beta) % p] = a.coeffs()[i];
    return CyclotomicInt::from_full(p, full);
}

CyclotomicInt gauss_sum(std::uint32_t p)
{
    std::vector<BigInt> full(p);
    for (std::uint64_t x = 0; x < p; ++x) full[(x * x) % p] += 1;
    return CyclotomicInt::from_full(p, full);
}

std::optional<BigInt> conj_norm(const CyclotomicInt& a) { return (a * automorphism(a.p() - 1, a)).as_integer(); }

}  // namespace dbent
