#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "dbent/digits.hpp"

namespace dbent {

/// Element of GF(p^m) in polynomial-basis representation. The rank is the
/// base-p digit string of the coefficients, constant term least significant.
struct FieldElem {
    std::uint32_t rank = 0;

    friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class Field;

/// The set beta * { x^exponent : x in GF(p^m)^* }.
struct CosetSet {
    std::uint32_t exponent = 1;
    FieldElem beta{1};
    std::vector<std::uint32_t> members;  // sorted ranks

    bool contains(FieldElem a) const;
};

/// GF(p^m) for an odd prime p, given by a monic irreducible modulus.
///
/// Fields are immutable and cheap to copy (shared state). Every subfield
/// GF(p^k), k | m, is realised as its own canonical Field together with a
/// fixed embedding into this one, so traces Tr_k^m land in a stand-alone
/// field object and compose with codomain arithmetic directly.
class Field {
   public:
    /// Canonical field: the lexicographically smallest monic irreducible
    /// modulus (coefficients compared from x^{m-1} downwards).
    Field(std::uint32_t p, std::uint32_t m);
    /// User-supplied modulus, m+1 coefficients, constant term first.
    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept;
    std::uint32_t m() const noexcept;
    std::uint64_t size() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElem elem(std::uint64_t rank) const;
    FieldElem zero() const noexcept { return FieldElem{0}; }
    FieldElem one() const noexcept { return FieldElem{1}; }
    /// Image of c in GF(p), the constants of the polynomial basis.
    FieldElem constant(std::int64_t c) const noexcept;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    /// a^e; negative exponents invert first. 0^0 = 1.
    FieldElem pow(FieldElem a, std::int64_t e) const;
    /// Multiplication through reduction of the product polynomial, without tables.
    FieldElem mul_poly(FieldElem a, FieldElem b) const;

    /// Tr_k^m(a) as an element of subfield(k).
    FieldElem trace(std::uint32_t k, FieldElem a) const;
    /// Tr_1^m(a) as an integer in [0, p).
    std::uint32_t trace_to_prime(FieldElem a) const;

    int quadratic_character(FieldElem a) const;
    bool is_square(FieldElem a) const { return quadratic_character(a) == 1; }
    FieldElem primitive_element() const noexcept;
    /// Discrete logarithm to the base primitive_element().
    std::uint64_t log(FieldElem a) const;
    std::uint64_t order(FieldElem a) const;

    CosetSet subgroup_coset(std::uint64_t exponent, FieldElem beta) const;

    const Field& subfield(std::uint32_t k) const;
    FieldElem embed(std::uint32_t k, FieldElem small) const;
    FieldElem project(std::uint32_t k, FieldElem big) const;
    bool in_subfield(std::uint32_t k, FieldElem a) const;

    const DigitArith& digits() const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept;

    struct Impl;

   private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

}  // namespace dbent
