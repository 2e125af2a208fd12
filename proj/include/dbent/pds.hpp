#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbent/spectral.hpp"

namespace dbent {

/// {x : F(x) in A}, optionally without the zero point.
struct PreimageSet {
    Space group;
    std::vector<std::uint64_t> members;  // sorted ranks
    std::vector<std::uint32_t> values;   // the codomain ranks in A, sorted
    bool zero_excluded = false;

    std::uint64_t size() const { return members.size(); }
    bool contains(Point x) const;
};

/// Parameters (v, k, lambda, mu) of a partial difference set. For the empty
/// set lambda and mu are vacuous and reported as 0; for the whole punctured
/// group mu is vacuous and reported as 0. Such sets are flagged degenerate.
struct PdsParams {
    BigInt v, k, lambda, mu;
    bool degenerate = false;

    BigInt beta() const { return lambda - mu; }
    BigInt gamma() const { return k - mu; }
    BigInt delta() const { return beta() * beta() + 4 * gamma(); }
    friend bool operator==(const PdsParams& a, const PdsParams& b)
    {
        return a.v == b.v && a.k == b.k && a.lambda == b.lambda && a.mu == b.mu;
    }
};

PreimageSet preimage(const VectorialFunction& F, const std::vector<FieldElem>& A, bool exclude_zero_point);

/// chi_u(D_i) = sum over F(x) = i of zeta^{<u,x>}. Computed directly and from
/// the component Walsh values W_{F_c}(-u); throws FormulaMismatch if the two differ.
CyclotomicInt char_sum_preimage(const VectorialFunction& F, Point u, FieldElem i);

/// |D_i| for every codomain rank i, from the closed form valid when n is even,
/// F(0) = 0, F(-x) = F(x) and every component has the same sign epsilon.
/// The premises are checked (HypothesisViolation) and the result is compared
/// with direct counts (FormulaMismatch).
std::vector<BigInt> preimage_sizes(const VectorialFunction& F, const DualBentCertificate& cert);

struct SigmaPredicates {
    bool is_identity = false;
    /// sigma^{-1}(c) H_l = c H_l for every c.
    bool coset_stable = false;
    /// sigma maps the squares onto the squares.
    bool squares_stable = false;
    /// sigma maps every coset of H_t onto a coset of H_t.
    bool coset_permuting = false;
    /// t' when sigma(c) = c^{-t'} for all c.
    std::optional<std::uint64_t> power_exponent;
};

/// Decides the conditions on sigma (a table over the ranks of K, entry 0
/// ignored) by exhaustive comparison of cosets, with l = t = `exponent`.
/// When sigma is a power map, coset_stable is also derived from
/// gcd(l, q-1) | 1 + r, r = t'^{-1} mod q-1, and the two must agree.
SigmaPredicates sigma_predicates(const Field& K, const std::vector<std::uint32_t>& sigma, std::uint64_t exponent);

struct Semiprimitive {
    bool ok = false;
    std::uint32_t j = 0;  // smallest j <= s with t | p^j + 1, 0 if none
    std::uint32_t r = 0;  // s = 2 j r when ok
};
Semiprimitive semiprimitive_check(std::uint32_t p, std::uint32_t s, std::uint64_t t);

/// D_A \ {0} for an arbitrary A when sigma is the identity.
PdsParams params_subset(std::uint32_t n, std::uint32_t s, std::uint32_t p, std::uint64_t size_a, bool contains_zero,
                        int epsilon);
/// Union of m1 cosets of a subgroup of order h_size in GF(p^s)^*, plus D_0
/// when m0 = 1, in a group of order p^{n_total}.
PdsParams params_coset_union(std::uint32_t n_total, std::uint32_t s, std::uint32_t p, std::uint64_t h_size,
                             std::uint64_t m1, std::uint32_t m0, int epsilon);

/// sum over x in H_t of zeta^{Tr_1^s(a x)}, H_t = {x^t}.
CyclotomicInt gaussian_period(std::uint32_t p, std::uint32_t s, std::uint64_t t, FieldElem a);
/// The same value from the closed form in the semiprimitive case; the
/// coset w^{t/2} H_t is taken for two different primitive elements w and
/// must not depend on the choice.
CyclotomicInt gaussian_period_semiprimitive(std::uint32_t p, std::uint32_t s, std::uint64_t t, FieldElem a);

/// Counts ordered representations d1 - d2 of every nonzero element.
/// nullopt when the counts are not constant on D and off D.
std::optional<PdsParams> verify_pds_bruteforce(const PreimageSet& D, const SizeCaps& caps = default_caps());

/// Checks |D| = k and chi(D) in {(beta +- sqrt(delta)) / 2} for every
/// nonprincipal character. Throws NonSquareDelta when delta is not a square.
bool verify_pds_characters(const PreimageSet& D, const PdsParams& candidate, const SizeCaps& caps = default_caps());

struct PdsReport {
    PdsParams params;
    std::string method;  // "bruteforce" or "characters"
    bool verified = false;
};

/// Brute force when |D| fits the cap, otherwise the character test against
/// `candidate` (which is then required).
PdsReport verify_pds(const PreimageSet& D, const std::optional<PdsParams>& candidate,
                     const SizeCaps& caps = default_caps());

}  // namespace dbent
