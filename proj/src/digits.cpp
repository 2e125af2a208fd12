#include "dbent/digits.hpp"

#include <stdexcept>

namespace dbent {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp)
{
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::vector<std::uint32_t> to_digits(std::uint64_t value, std::uint32_t p, std::uint32_t ndigits)
{
    std::vector<std::uint32_t> d(ndigits, 0);
    for (std::uint32_t i = 0; i < ndigits; ++i) {
        d[i] = static_cast<std::uint32_t>(value % p);
        value /= p;
    }
    return d;
}

std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, std::uint32_t p)
{
    std::uint64_t r = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * p + *it;
    return r;
}

DigitArith::DigitArith(std::uint32_t p, std::uint32_t ndigits) : p_(p), ndigits_(ndigits)
{
    chunk_digits_ = 1;
    chunk_size_ = p;
    while (chunk_digits_ < ndigits && static_cast<std::uint64_t>(chunk_size_) * p <= 256) {
        chunk_size_ *= p;
        ++chunk_digits_;
    }
    nchunks_ = ndigits == 0 ? 0 : (ndigits + chunk_digits_ - 1) / chunk_digits_;

    const std::uint32_t s = chunk_size_;
    add_.resize(static_cast<std::size_t>(s) * s);
    sub_.resize(static_cast<std::size_t>(s) * s);
    scale_.resize(static_cast<std::size_t>(s) * p);
    for (std::uint32_t a = 0; a < s; ++a) {
        auto da = to_digits(a, p, chunk_digits_);
        for (std::uint32_t b = 0; b < s; ++b) {
            auto db = to_digits(b, p, chunk_digits_);
            std::vector<std::uint32_t> sum(chunk_digits_), diff(chunk_digits_);
            for (std::uint32_t i = 0; i < chunk_digits_; ++i) {
                sum[i] = (da[i] + db[i]) % p;
                diff[i] = (da[i] + p - db[i]) % p;
            }
            add_[a * s + b] = static_cast<std::uint16_t>(from_digits(sum, p));
            sub_[a * s + b] = static_cast<std::uint16_t>(from_digits(diff, p));
        }
        for (std::uint32_t c = 0; c < p; ++c) {
            std::vector<std::uint32_t> sc(chunk_digits_);
            for (std::uint32_t i = 0; i < chunk_digits_; ++i) sc[i] = (da[i] * c) % p;
            scale_[a * p + c] = static_cast<std::uint16_t>(from_digits(sc, p));
        }
    }
}

std::uint64_t DigitArith::add(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t c = 0; c < nchunks_; ++c) {
        const auto ca = a % chunk_size_, cb = b % chunk_size_;
        a /= chunk_size_;
        b /= chunk_size_;
        r += mult * add_[ca * chunk_size_ + cb];
        mult *= chunk_size_;
    }
    return r;
}

std::uint64_t DigitArith::sub(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t c = 0; c < nchunks_; ++c) {
        const auto ca = a % chunk_size_, cb = b % chunk_size_;
        a /= chunk_size_;
        b /= chunk_size_;
        r += mult * sub_[ca * chunk_size_ + cb];
        mult *= chunk_size_;
    }
    return r;
}

void DigitArith::split(std::uint64_t a, std::uint16_t* out) const
{
    for (std::uint32_t c = 0; c < nchunks_; ++c) {
        out[c] = static_cast<std::uint16_t>(a % chunk_size_);
        a /= chunk_size_;
    }
}

std::uint64_t DigitArith::sub_split(const std::uint16_t* a, const std::uint16_t* b) const
{
    std::uint64_t r = 0;
    for (std::uint32_t c = nchunks_; c-- > 0;) r = r * chunk_size_ + sub_[a[c] * chunk_size_ + b[c]];
    return r;
}

std::uint64_t DigitArith::scale(std::uint32_t c, std::uint64_t a) const
{
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t k = 0; k < nchunks_; ++k) {
        const auto ca = a % chunk_size_;
        a /= chunk_size_;
        r += mult * scale_[ca * p_ + c];
        mult *= chunk_size_;
    }
    return r;
}

}  // namespace dbent
