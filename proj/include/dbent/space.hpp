#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "dbent/field.hpp"

namespace dbent {

/// Point of a Space. The rank is the mixed-radix number formed by the factor
/// ranks, factor 0 least significant; its base-p digits are the
/// polynomial-basis coordinates of all factors in order.
struct Point {
    std::uint64_t rank = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// V_n as a product of finite fields over a common prime p.
///
/// The inner product is the sum over factors of Tr_1^{m_i}(a_i b_i); a GF(p)
/// factor contributes an ordinary product, so GF(p)^n is n factors of degree 1.
class Space {
   public:
    explicit Space(std::vector<Field> factors);
    /// GF(p)^n with the dot product.
    static Space prime_power(std::uint32_t p, std::uint32_t n);

    const std::vector<Field>& factors() const noexcept { return factors_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }

    Point point(std::uint64_t rank) const;
    std::vector<FieldElem> coords(Point x) const;
    Point from_coords(const std::vector<FieldElem>& coords) const;
    FieldElem coord(Point x, std::size_t factor) const;

    std::uint32_t inner_product(Point a, Point b) const;
    Point add(Point a, Point b) const { return Point{arith_.add(a.rank, b.rank)}; }
    Point sub(Point a, Point b) const { return Point{arith_.sub(a.rank, b.rank)}; }
    Point negate(Point x) const { return Point{arith_.neg(x.rank)}; }
    /// Multiplication of every coordinate by c in GF(p).
    Point scalar_mul(std::uint32_t c, Point x) const { return Point{arith_.scale(c % p_, x.rank)}; }

    /// The point a' with <a, x> = sum_j a'_j x_j over the base-p digits x_j of x.
    Point dual_coordinates(Point a) const;
    /// dual_coordinates for every point, indexed by rank.
    std::vector<std::uint64_t> dual_coordinate_table() const;

    const DigitArith& arith() const noexcept { return arith_; }

    friend bool operator==(const Space& a, const Space& b) noexcept;

   private:
    std::vector<Field> factors_;
    std::vector<std::uint64_t> offsets_;  // p^(digits before factor i)
    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint64_t size_ = 1;
    DigitArith arith_;
    std::vector<std::uint64_t> basis_dual_;  // dual_coordinates(p^j)
};

}  // namespace dbent
