#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbent/spectral.hpp"

namespace dbent {

/// L(x) = sum_i coeffs[i] x^{q^i} over GF(p^m), q = p^s.
struct QPolynomial {
    std::uint32_t s = 1;
    std::vector<FieldElem> coeffs;

    static QPolynomial identity(std::uint32_t s) { return QPolynomial{s, {FieldElem{1}}}; }
    FieldElem operator()(const Field& F, FieldElem x) const;
    /// Value table over F; throws NotPermutation unless L is a bijection.
    std::vector<std::uint32_t> permutation_table(const Field& F) const;
};

/// A vectorial function together with the dual, sigma and epsilons its
/// construction predicts.
struct Construction {
    std::string family;
    VectorialFunction F;
    VectorialFunction Fstar;
    /// Predicted sigma by codomain rank; entry 0 unused.
    std::vector<std::uint32_t> sigma_claim;
    /// Predicted sign of each component relative to bent_unit, when the
    /// construction determines it; entry 0 unused.
    std::optional<std::vector<int>> epsilon_claim;
};

/// Sign relative to bent_unit of a value (-1)^{flip} ε^K η p^{N/2}, where
/// ε = 1 for p ≡ 1 (mod 4), sqrt(-1) for p ≡ 3 (mod 4), and K has the parity
/// of the total dimension N.
int normalized_sign(std::uint32_t p, bool flip, std::uint32_t K, int eta);

/// Tr_s^m(a x y^e) on GF(p^m)^2.
Construction mm_power(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem a, std::uint64_t e);
/// Tr_s^m(a x L(y)) on GF(p^m)^2.
Construction mm_qpoly(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem a, const QPolynomial& L);
/// Tr_s^n(a x^2) on GF(p^n).
Construction quad_trace(std::uint32_t p, std::uint32_t n, std::uint32_t s, FieldElem a);
/// a_1 x_1^2 + ... + a_m x_m^2 on GF(p^s)^m.
Construction diag_quad(std::uint32_t p, std::uint32_t s, const std::vector<FieldElem>& a);

/// The regular spread of GF(p^m)^2: U_0 = {0} x GF(p^m) and, for i >= 1,
/// U_i = {(x, a x)} with a the element of rank i-1.
struct RegularSpread {
    Field field;

    explicit RegularSpread(Field f) : field(std::move(f)) {}
    std::uint64_t count() const { return field.size() + 1; }
    /// Index of the member containing the nonzero point (x, y); the zero point gives 0.
    std::uint64_t member(FieldElem x, FieldElem y) const;
    /// Index j with U_j equal to the orthogonal complement of U_i under Tr_1^m(x1 z1 + x2 z2).
    std::uint64_t complement(std::uint64_t i) const;
};

/// labels[i] is the value on U_i minus the origin (the origin itself takes
/// labels[0]); labels[1..p^m] must be balanced over GF(p^s).
Construction spread_bent(std::uint32_t p, std::uint32_t m, std::uint32_t s, const std::vector<FieldElem>& labels);
/// labels[i] = (i-1) mod p^s for i >= 1 and labels[0] = gamma0.
std::vector<FieldElem> default_spread_labels(std::uint32_t p, std::uint32_t m, std::uint32_t s, FieldElem gamma0);

struct SwitchedQuadraticParams {
    std::uint32_t n = 2, m = 1, s = 1;
    FieldElem alpha1{1}, alpha2{1}, alpha3{1};  // in GF(p^n)^*
    FieldElem beta{1};                          // in GF(p^m)^*
    FieldElem gamma{1};                         // in GF(p^m)^*
    std::optional<QPolynomial> L;               // identity when absent
};

/// H(x, y1, y2) = F_{Tr_s^m(γ y2^2)}(x) + Tr_s^m(β y1 L(y2)) on
/// GF(p^n) x GF(p^m) x GF(p^m), where F_i(x) = Tr_s^n(α x^2) with α = α1 for
/// i = 0, α2 for squares i and α3 for non-squares.
Construction switched_quadratic(std::uint32_t p, const SwitchedQuadraticParams& prm);

}  // namespace dbent
