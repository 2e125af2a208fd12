#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dbent {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}. zeta^{p-1} is
/// always rewritten as -(1 + zeta + ... + zeta^{p-2}), so equality is
/// coefficientwise.
class CyclotomicInt {
   public:
    explicit CyclotomicInt(std::uint32_t p);
    CyclotomicInt(std::uint32_t p, std::vector<BigInt> coeffs);

    static CyclotomicInt integer(std::uint32_t p, const BigInt& value);
    /// zeta^j for any integer j.
    static CyclotomicInt zeta_power(std::uint32_t p, std::int64_t j);
    /// Builds the canonical form from coefficients of 1, zeta, ..., zeta^{p-1}.
    static CyclotomicInt from_full(std::uint32_t p, const std::vector<BigInt>& full);

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    /// The rational integer value, if the element lies in Z.
    std::optional<BigInt> as_integer() const;

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt scaled(const BigInt& k) const;
    /// Division by a rational integer, if exact in Z[zeta_p].
    std::optional<CyclotomicInt> divide_exact(const BigInt& k) const;

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

    std::string to_string() const;

   private:
    void check_same(const CyclotomicInt& o) const;

    std::uint32_t p_;
    std::vector<BigInt> c_;
};

/// The automorphism zeta -> zeta^beta, 1 <= beta <= p-1.
CyclotomicInt automorphism(std::uint32_t beta, const CyclotomicInt& a);
/// g = sum_{x in F_p} zeta^{x^2}; g^2 = (-1)^{(p-1)/2} p.
CyclotomicInt gauss_sum(std::uint32_t p);
/// a * conj(a) if it is a rational integer.
std::optional<BigInt> conj_norm(const CyclotomicInt& a);

}  // namespace dbent
