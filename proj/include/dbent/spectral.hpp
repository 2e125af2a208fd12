#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dbent/config.hpp"
#include "dbent/cyclo.hpp"
#include "dbent/space.hpp"

namespace dbent {

/// f: V_n -> GF(p) as a table indexed by point rank.
struct PAryFunction {
    Space domain;
    std::vector<std::uint32_t> table;

    PAryFunction(Space domain, std::vector<std::uint32_t> table);
    std::uint32_t operator()(Point x) const { return table[x.rank]; }
};

/// F: V_n -> GF(p^s) as a table of codomain ranks.
struct VectorialFunction {
    Space domain;
    Field codomain;
    std::vector<std::uint32_t> table;

    VectorialFunction(Space domain, Field codomain, std::vector<std::uint32_t> table);
    FieldElem operator()(Point x) const { return FieldElem{table[x.rank]}; }
    /// The same function read as a p-ary function (s = 1 only).
    PAryFunction as_pary() const;
    static VectorialFunction from_pary(const PAryFunction& f);
};

/// Walsh values W(a), a in rank order, each stored as the p-1 canonical
/// coefficients of CyclotomicInt. All entries are bounded by p^n in absolute
/// value, so 64-bit integers are exact at every admissible size.
struct WalshSpectrum {
    std::uint32_t p = 0;
    std::vector<std::int64_t> coeffs;

    std::uint64_t size() const { return coeffs.size() / (p - 1); }
    const std::int64_t* row(std::uint64_t a) const { return coeffs.data() + a * (p - 1); }
    CyclotomicInt value(std::uint64_t a) const;

    friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// For each point a, sum_x w_x ζ^{-<a,x>}, where w_x = sum_j weights[x*p + j] ζ^j.
/// Output is in WalshSpectrum layout. Runs the radix-p fast transform.
WalshSpectrum character_transform(const Space& space, std::vector<std::int64_t> weights,
                                  const SizeCaps& caps = default_caps());

WalshSpectrum walsh_full(const PAryFunction& f, const SizeCaps& caps = default_caps());
/// Direct O(p^{2n}) evaluation of every Walsh value.
WalshSpectrum walsh_naive(const PAryFunction& f);

/// |W(a)|^2 of one entry, if it is a rational integer.
std::optional<BigInt> row_norm(const WalshSpectrum& w, std::uint64_t a);
bool parseval_holds(const WalshSpectrum& w, std::uint32_t n);

/// The value u * ζ^j with u = p^{n/2} (n even) or p^{(n-1)/2} g (n odd).
CyclotomicInt bent_unit(std::uint32_t p, std::uint32_t n);

struct BentClassification {
    bool is_bent = false;
    bool weakly_regular = false;
    bool regular = false;
    /// Constant sign relative to bent_unit when weakly regular, else 0.
    int epsilon = 0;
    /// f*(a) from W(a) = ±u ζ^{f*(a)}; filled for every bent function.
    std::optional<PAryFunction> dual;
    std::vector<std::int8_t> signs;
};

BentClassification classify_bent(const PAryFunction& f, const SizeCaps& caps = default_caps());
BentClassification classify_spectrum(const Space& domain, const WalshSpectrum& w);

/// x -> Tr_1^s(c F(x)).
PAryFunction component(const VectorialFunction& F, FieldElem c);
bool is_vectorial_bent(const VectorialFunction& F, const SizeCaps& caps = default_caps());

struct DualBentCertificate {
    VectorialFunction dual;
    /// sigma[c] for codomain rank c; sigma[0] = 0.
    std::vector<std::uint32_t> sigma;
    /// Sign of each component relative to bent_unit (0 when not weakly regular).
    std::vector<int> epsilons;
};

/// Checks that the duals of the components of F are exactly the components of
/// Fstar, permuted. nullopt means Fstar is not a vectorial dual of F.
std::optional<DualBentCertificate> dual_bent_certificate(const VectorialFunction& F, const VectorialFunction& Fstar,
                                                         const SizeCaps& caps = default_caps());

/// Exponent tuple (one entry per base-p coordinate) -> coefficient in [1, p).
using Anf = std::map<std::vector<std::uint32_t>, std::uint32_t>;

/// Algebraic normal form over the base-p coordinates of the domain, per-variable
/// degree at most p-1.
Anf anf(const PAryFunction& f);
std::uint32_t anf_evaluate(const Anf& poly, std::uint32_t p, const std::vector<std::uint32_t>& coords);

/// All l in [1, p-1] with f(a x) = a^l f(x) for every a in GF(p)^* and x.
std::vector<std::uint32_t> lform_exponents(const PAryFunction& f);

struct LformReport {
    enum class Status { NotApplicable, Confirmed, Counterexample };
    Status status = Status::NotApplicable;
    std::string reason;
    std::vector<std::uint32_t> lforms;
    std::optional<std::uint32_t> exponent;  // some l with gcd(l-1, p-1) = 1
    int epsilon = 0;
};

/// For f with f(0) = 0: if f is weakly regular and dual-bent as a map to GF(p),
/// it must be an l-form with gcd(l-1, p-1) = 1. Reports which case holds.
LformReport check_lform_converse(const PAryFunction& f, const SizeCaps& caps = default_caps());

}  // namespace dbent
