#include "dbent/space.hpp"

#include <string>

#include "dbent/error.hpp"

namespace dbent {

Space::Space(std::vector<Field> factors) : factors_(std::move(factors))
{
    if (factors_.empty()) throw Error(ErrorCode::InvalidParameter, "space needs at least one factor");
    p_ = factors_.front().p();
    long double size = 1;
    for (const auto& f : factors_) {
        if (f.p() != p_) throw Error(ErrorCode::MixedPrime, "space factors must share one characteristic");
        offsets_.push_back(size_);
        n_ += f.m();
        size *= static_cast<long double>(f.size());
        if (size > 1.8e19L) throw Error(ErrorCode::SizeGuard, "space too large");
        size_ *= f.size();
    }
    arith_ = DigitArith(p_, n_);
    basis_dual_.resize(n_);
    std::uint64_t e = 1;
    for (std::uint32_t j = 0; j < n_; ++j, e *= p_) {
        std::uint64_t acc = 0, weight = 1;
        for (std::uint32_t i = 0; i < n_; ++i, weight *= p_) acc += weight * inner_product(Point{e}, Point{weight});
        basis_dual_[j] = acc;
    }
}

Space Space::prime_power(std::uint32_t p, std::uint32_t n)
{
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
    return Space(std::vector<Field>(n, Field(p, 1)));
}

Point Space::point(std::uint64_t rank) const
{
    if (rank >= size_) throw Error(ErrorCode::InvalidParameter, "point rank " + std::to_string(rank) + " out of range");
    return Point{rank};
}

FieldElem Space::coord(Point x, std::size_t factor) const
{
    return FieldElem{static_cast<std::uint32_t>((x.rank / offsets_[factor]) % factors_[factor].size())};
}

std::vector<FieldElem> Space::coords(Point x) const
{
    std::vector<FieldElem> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) {
        out.push_back(FieldElem{static_cast<std::uint32_t>(x.rank % f.size())});
        x.rank /= f.size();
    }
    return out;
}

Point Space::from_coords(const std::vector<FieldElem>& c) const
{
    if (c.size() != factors_.size()) throw Error(ErrorCode::InvalidParameter, "coordinate count mismatch");
    std::uint64_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].rank >= factors_[i].size()) throw Error(ErrorCode::InvalidParameter, "coordinate out of range");
        r = r * factors_[i].size() + c[i].rank;
    }
    return Point{r};
}

std::uint32_t Space::inner_product(Point a, Point b) const
{
    std::uint64_t acc = 0;
    for (const auto& f : factors_) {
        const auto q = f.size();
        const FieldElem ai{static_cast<std::uint32_t>(a.rank % q)}, bi{static_cast<std::uint32_t>(b.rank % q)};
        a.rank /= q;
        b.rank /= q;
        if (ai.rank && bi.rank) acc += f.trace_to_prime(f.mul(ai, bi));
    }
    return static_cast<std::uint32_t>(acc % p_);
}

Point Space::dual_coordinates(Point a) const
{
    std::uint64_t acc = 0, r = a.rank;
    for (std::uint32_t j = 0; j < n_; ++j) {
        const auto d = static_cast<std::uint32_t>(r % p_);
        r /= p_;
        if (d) acc = arith_.add(acc, arith_.scale(d, basis_dual_[j]));
    }
    return Point{acc};
}

std::vector<std::uint64_t> Space::dual_coordinate_table() const
{
    std::vector<std::uint64_t> out(size_);
    // ranks below p^(j+1) are filled from ranks below p^j
    std::uint64_t block = 1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        for (std::uint32_t d = 1; d < p_; ++d) {
            const std::uint64_t shift = arith_.scale(d, basis_dual_[j]);
            for (std::uint64_t r = 0; r < block; ++r) out[d * block + r] = arith_.add(out[r], shift);
        }
        block *= p_;
    }
    return out;
}

bool operator==(const Space& a, const Space& b) noexcept
{
    if (a.factors_.size() != b.factors_.size()) return false;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
        if (!(a.factors_[i] == b.factors_[i])) return false;
    return true;
}

}  // namespace dbent
