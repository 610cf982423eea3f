#pragma once

#include <optional>
#include <vector>

#include "k3lab/types.hpp"

namespace k3lab {

// Monic degree-22 characteristic polynomial of Frobenius on H^2 of a K3
// reduction. Coefficients run from the leading 1 downward: coefficients[i]
// multiplies T^(22-i). Eigenvalues are stored untwisted, absolute value p;
// unit-root tests therefore ask whether lambda/p is a root of unity.
struct WeilPolynomial {
    long p = 0;
    std::vector<Int> coefficients;
    long known_algebraic_rank = 0;
    int sign = 0;  // the functional-equation sign once established
};

// a_k = N_k - 1 - p^{2k}, the Frobenius power sums on H^2
std::vector<Int> traces_from_counts(long p, const std::vector<Int>& counts);

// point counts N_1..N_kmax implied by a complete polynomial
std::vector<Int> counts_from_weil(const WeilPolynomial& W, int kmax);

// c_0..c_m of the degree-22 charpoly from the first m power sums, exact
// Newton identities; a non-integral step means the input counts are wrong
std::vector<Int> newton_charpoly(const std::vector<Int>& traces);

// Complete a prefix c_0..c_k (k >= 11) using c_{22-i} = sign * p^{22-2i} c_i.
// sign 0 asks for detection; detection needs at least one decided pair, and
// both-signs-fail on an overdetermined input reports inconsistent counts.
WeilPolynomial apply_functional_equation(long p, const std::vector<Int>& partial, int sign = 0);

// total multiplicity of eigenvalues p*zeta with zeta a root of unity of
// order <= cyclotomic_order_bound, by exact division by p^phi(n) Phi_n(T/p)
long picard_upper_bound(const WeilPolynomial& W, long cyclotomic_order_bound = 66);

// exact quotient by (T-p)^r for classes already known algebraic; a failed
// division means the claimed rank is wrong and aborts
std::vector<Int> divide_out_algebraic(const std::vector<Int>& coeffs, long p, long r);

// two-prime descent: equal rank bounds with different discriminant square
// classes drop the bound by one, otherwise the smaller bound wins
long compare_reductions(long r1, const Int& d1, long r2, const Int& d2);

// Phi_n over the integers, leading coefficient first
std::vector<Int> cyclotomic(long n);
std::vector<Int> scaled_cyclotomic(long n, long p);

// dense integer polynomials, leading coefficient first
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::optional<std::vector<Int>> poly_exact_divide(const std::vector<Int>& num,
                                                  const std::vector<Int>& den);

}  // namespace k3lab
