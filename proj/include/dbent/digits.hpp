#pragma once

#include <cstdint>
#include <vector>

namespace dbent {

/// Digit-wise arithmetic on integers read as base-p digit strings of fixed
/// length, i.e. vectors of GF(p)^n packed into a rank. Chunks of digits are
/// handled through small lookup tables.
class DigitArith {
   public:
    DigitArith() = default;
    DigitArith(std::uint32_t p, std::uint32_t ndigits);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return sub(0, a); }
    /// Multiplies every digit by c (mod p).
    std::uint64_t scale(std::uint32_t c, std::uint64_t a) const;

    /// Number of table chunks a value is cut into by split().
    std::uint32_t chunk_count() const noexcept { return nchunks_; }
    /// Writes the chunks of a, least significant first, to out[0 .. chunk_count()).
    void split(std::uint64_t a, std::uint16_t* out) const;
    /// sub() on operands already cut by split().
    std::uint64_t sub_split(const std::uint16_t* a, const std::uint16_t* b) const;

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t ndigits() const noexcept { return ndigits_; }

   private:
    std::uint32_t p_ = 0;
    std::uint32_t ndigits_ = 0;
    std::uint32_t chunk_digits_ = 1;
    std::uint32_t chunk_size_ = 1;  // p^chunk_digits_
    std::uint32_t nchunks_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> sub_;
    std::vector<std::uint16_t> scale_;
};

/// Base-p digits of `value`, least significant first, padded to `ndigits`.
std::vector<std::uint32_t> to_digits(std::uint64_t value, std::uint32_t p, std::uint32_t ndigits);
std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, std::uint32_t p);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

}  // namespace dbent
