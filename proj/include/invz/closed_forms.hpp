#pragma once

// Explicit formulas for uniform, paving, sparse paving and elementary split
// matroids. Every formula here is an independent computation path: the test
// and acceptance suites hold them against the general lattice engine.
// Rational intermediates are exact and must clear to integers; anything else
// is a hard NonIntegerCoefficient error.

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "invz/arith.hpp"
#include "invz/errors.hpp"
#include "invz/polynomial.hpp"

namespace invz {

/// mu of U_{k,n} = (-1)^k C(n-1, k-1), for 1 <= k <= n.
inline BigInt mu_uniform(int k, int n) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank,
                         "mu_uniform(" + std::to_string(k) + "," + std::to_string(n) + ")");
    BigInt v = binomial(n - 1, k - 1);
    return (k % 2 == 0) ? v : -v;
}

/// Inverse KL polynomial of U_{k,n}; constant 1 for the Boolean case k = n.
inline IntPolynomial q_uniform(int k, int n) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank,
                         "q_uniform(" + std::to_string(k) + "," + std::to_string(n) + ")");
    if (k == n) return IntPolynomial::one();
    std::vector<BigInt> c;
    for (int i = 0; 2 * i <= k - 1; ++i) {
        Rational term = make_rational(binomial(n, k) * BigInt(n - k) * BigInt(k - 2 * i) *
                                          binomial(k, i),
                                      BigInt(n - k + i) * BigInt(n - i));
        c.push_back(rational_to_integer(term));
    }
    return IntPolynomial(std::move(c));
}

/// Inverse Z-polynomial of U_{k,n}: two binomial sums that fill the low and
/// high halves of a palindromic polynomial of degree k without overlap.
inline IntPolynomial y_uniform(int k, int n) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank,
                         "y_uniform(" + std::to_string(k) + "," + std::to_string(n) + ")");
    if (k / 2 >= k - (k - 1) / 2)
        throw_internal(errc::internal_check, "index ranges of the two sums collide");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
    for (int i = 0; 2 * i <= k; ++i)
        c[static_cast<std::size_t>(i)] += binomial(n, i) * binomial(n - i - 1, n - k);
    for (int i = 0; 2 * i <= k - 1; ++i)
        c[static_cast<std::size_t>(k - i)] += binomial(n, i) * binomial(n - i - 1, n - k);
    return IntPolynomial(std::move(c));
}

namespace detail {

/// Y of U_{k,n} extended by the rank-zero convention Y = 1 (a rank-zero
/// matroid has only loops, and Y ignores loops).
inline IntPolynomial y_uniform_any(int k, int n) {
    if (k == 0) return IntPolynomial::one();
    return y_uniform(k, n);
}

}  // namespace detail

/// Specialization of y_uniform at n = k+1, kept as a separate path for
/// identity testing: coefficients (k-i) C(k+1, i).
inline IntPolynomial y_uniform_corank1(int k) {
    if (k < 1) throw_validation(errc::invalid_rank, "y_uniform_corank1 requires k >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
    for (int i = 0; 2 * i <= k; ++i)
        c[static_cast<std::size_t>(i)] += BigInt(k - i) * binomial(k + 1, i);
    for (int i = 0; 2 * i <= k - 1; ++i)
        c[static_cast<std::size_t>(k - i)] += BigInt(k - i) * binomial(k + 1, i);
    return IntPolynomial(std::move(c));
}

/// Z-polynomial of U_{k,n} as an explicit double sum over (1+t)^i t^j terms.
/// A multinomial with a negative part vanishes, which also covers the
/// boundary where the 1/(n-i-j) denominator would degenerate.
inline IntPolynomial z_uniform(int k, int n) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank,
                         "z_uniform(" + std::to_string(k) + "," + std::to_string(n) + ")");
    IntPolynomial acc;
    auto add_terms = [&](int j, int i, int power_of_t) {
        BigInt m = multinomial({1L, static_cast<long>(i), static_cast<long>(j),
                                static_cast<long>(n - k), static_cast<long>(k - i - j - 1)});
        if (m == 0) return;
        if ((k - i + 1) % 2 != 0) m = -m;
        BigInt coeff = rational_to_integer(make_rational(m, BigInt(n - i - j)));
        acc += (coeff * one_plus_t_pow(i)).shifted(power_of_t);
    };
    for (int j = 0; 2 * j <= k; ++j)
        for (int i = 0; i <= k - 2 * j; ++i) add_terms(j, i, j);
    for (int j = 0; 2 * j <= k - 1; ++j)
        for (int i = 0; i <= k - 2 * j - 1; ++i) add_terms(j, i, k - i - j);
    return acc;
}

/// Rank, size and circuit-hyperplane count of a sparse paving matroid,
/// together with the normalized density lambda* = lambda / C(n,k).
struct SparsePavingProfile {
    int k = 0;
    int n = 0;
    BigInt lambda;
    Rational lambda_star;

    static SparsePavingProfile make(int k, int n, BigInt lambda) {
        if (!(1 <= k && k <= n))
            throw_validation(errc::invalid_rank,
                             "sparse paving profile (k=" + std::to_string(k) +
                                 ", n=" + std::to_string(n) + ")");
        BigInt total = binomial(n, k);
        // lambda <= C(n,k) * min(1/(k+1), 1/(n-k+1))
        long denom = std::max(k + 1, n - k + 1);
        if (lambda < 0 || lambda * BigInt(denom) > total)
            throw_validation(errc::lambda_out_of_range,
                             "lambda " + to_decimal(lambda) + " outside [0, C(n,k)/" +
                                 std::to_string(denom) + "] for (k=" + std::to_string(k) +
                                 ", n=" + std::to_string(n) + ")");
        SparsePavingProfile p;
        p.k = k;
        p.n = n;
        p.lambda = lambda;
        p.lambda_star = make_rational(std::move(lambda), std::move(total));
        return p;
    }
};

/// The polynomial subtracted per circuit-hyperplane: (1+t)^k, minus the
/// central Catalan correction C_{k/2} t^{k/2} when k is even. For k = 1 the
/// correction term is zero: relaxing a rank-one circuit-hyperplane turns a
/// loop into a regular element, and Y is blind to loops.
inline IntPolynomial sparse_paving_correction(int k) {
    if (k == 1) return IntPolynomial();
    IntPolynomial c = one_plus_t_pow(k);
    if (k % 2 == 0) c -= IntPolynomial::monomial(catalan(k / 2), k / 2);
    return c;
}

/// Y of a sparse paving matroid with the given profile.
inline IntPolynomial y_sparse_paving(const SparsePavingProfile& p) {
    return y_uniform(p.k, p.n) - p.lambda * sparse_paving_correction(p.k);
}

/// Single coefficient [t^i] of y_sparse_paving, via the closed rational
/// expressions; the symmetric half is obtained by mirroring i to k-i. The
/// even-k center value is additionally cross-checked against its
/// "+ lambda C_{k/2}" decomposition.
inline BigInt sparse_paving_coefficient(const SparsePavingProfile& p, int i) {
    if (i < 0 || i > p.k)
        throw_validation(errc::invalid_subset,
                         "coefficient index " + std::to_string(i) + " outside 0.." +
                             std::to_string(p.k));
    const int m = std::min(i, p.k - i);
    if (p.k == 1) return 1;  // Y = 1 + t regardless of lambda; see above
    const BigInt full = binomial(p.n, p.k);
    if (2 * m <= p.k - 1) {
        Rational v = make_rational(full * binomial(p.k, m), 1) *
                     (make_rational(BigInt(p.k - m), BigInt(p.n - m)) - p.lambda_star);
        return rational_to_integer(v);
    }
    // center of an even-degree polynomial: m = k/2
    Rational v = make_rational(full * binomial(p.k, m) * BigInt(p.k), BigInt(2 + p.k)) *
                 (make_rational(BigInt(2 + p.k), BigInt(2 * p.n - p.k)) - p.lambda_star);
    BigInt center = rational_to_integer(v);
    Rational alt = make_rational(full * binomial(p.k, m), 1) *
                       (make_rational(BigInt(m), BigInt(p.n - m)) - p.lambda_star) +
                   make_rational(p.lambda * catalan(m), 1);
    if (rational_to_integer(alt) != center)
        throw_internal(errc::internal_check,
                       "two decompositions of the central coefficient disagree");
    return center;
}

/// Y of a paving matroid from its stressed-hyperplane size multiset
/// {h -> count}: Y(U_{k,n}) - sum_h count_h (Y(U_{k,h+1}) - (1+t) Y(U_{k-1,h})).
inline IntPolynomial y_paving(int k, int n, const std::map<int, BigInt>& lambda_by_size) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank, "y_paving rank out of range");
    IntPolynomial acc = y_uniform(k, n);
    const IntPolynomial one_plus_t = one_plus_t_pow(1);
    for (const auto& [h, count] : lambda_by_size) {
        if (h < k)
            throw_validation(errc::invalid_hyperplane_size,
                             "stressed hyperplane size " + std::to_string(h) + " below rank " +
                                 std::to_string(k));
        if (count < 0) throw_validation(errc::validation, "negative multiplicity");
        acc -= count * (y_uniform(k, h + 1) - one_plus_t * detail::y_uniform_any(k - 1, h));
    }
    return acc;
}

/// Y of an elementary split matroid from its stressed-subset statistics
/// {(r,h) -> count}. The Y of the cuspidal matroid comes through a callback
/// so this module stays formula-only.
using CuspidalYFn = std::function<IntPolynomial(int r, int k, int h, int n)>;

inline IntPolynomial y_elementary_split(int k, int n,
                                        const std::map<std::pair<int, int>, BigInt>& lambda_by_rank_size,
                                        const CuspidalYFn& cuspidal_y) {
    if (!(1 <= k && k <= n))
        throw_validation(errc::invalid_rank, "y_elementary_split rank out of range");
    IntPolynomial acc = y_uniform(k, n);
    for (const auto& [rh, count] : lambda_by_rank_size) {
        const auto [r, h] = rh;
        if (!(0 <= r && r <= h && 0 <= k - r && k - r <= n - h))
            throw_validation(errc::invalid_cuspidal_parameters,
                             "stressed subset parameters (r=" + std::to_string(r) +
                                 ", h=" + std::to_string(h) + ") invalid for (k=" +
                                 std::to_string(k) + ", n=" + std::to_string(n) + ")");
        if (count < 0) throw_validation(errc::validation, "negative multiplicity");
        acc -= count * (cuspidal_y(r, k, h, n) -
                        detail::y_uniform_any(k - r, n - h) * detail::y_uniform_any(r, h));
    }
    return acc;
}

/// Both sides of the corank-one reduction
///   Y(U_{k,k+1}) - (1+t) Y(U_{k-1,k})  ==  (1+t)^k - [k even] C_{k/2} t^{k/2},
/// computed independently so callers can assert (in)equality. The identity
/// holds for k >= 2; at k = 1 the left side collapses to 0 under the
/// rank-zero convention Y(U_{0,1}) = 1 while the right side is 1 + t.
inline std::pair<IntPolynomial, IntPolynomial> sparse_correction_identity(int k) {
    if (k < 1) throw_validation(errc::invalid_rank, "identity requires k >= 1");
    IntPolynomial lhs =
        y_uniform_corank1(k) - one_plus_t_pow(1) * detail::y_uniform_any(k - 1, k);
    IntPolynomial rhs = one_plus_t_pow(k);
    if (k % 2 == 0) rhs -= IntPolynomial::monomial(catalan(k / 2), k / 2);
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace invz
