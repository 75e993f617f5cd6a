#pragma once

// Dense univariate polynomials over arbitrary-precision integers, the
// coefficient-sequence predicates (palindromic / unimodal / log-concave /
// internal zeros), the gamma expansion in the t^i (1+t)^(d-2i) basis, and a
// sparse bivariate polynomial used only for the Tutte polynomial.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invz/arith.hpp"
#include "invz/errors.hpp"

namespace invz {

/// Canonical form: empty vector is the zero polynomial, otherwise the last
/// coefficient is nonzero. Index i holds the coefficient of t^i.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(BigInt v) {
        IntPolynomial p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static IntPolynomial one() { return constant(1); }
    static IntPolynomial monomial(BigInt v, int deg) {
        IntPolynomial p;
        if (v != 0) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
            p.c_.back() = std::move(v);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }

    const BigInt& coeff(int i) const {
        static const BigInt zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const BigInt& s, IntPolynomial p) {
        for (auto& c : p.c_) c *= s;
        p.trim();
        return p;
    }
    friend IntPolynomial operator*(IntPolynomial p, const BigInt& s) { return s * std::move(p); }
    IntPolynomial operator-() const { return BigInt(-1) * *this; }

    /// Multiply by t^j.
    IntPolynomial shifted(int j) const {
        if (is_zero()) return {};
        std::vector<BigInt> out(static_cast<std::size_t>(j), BigInt(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return IntPolynomial(std::move(out));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(to_decimal(c));
        return out;
    }

    static IntPolynomial from_decimal_strings(std::span<const std::string> strs) {
        std::vector<BigInt> c;
        c.reserve(strs.size());
        for (const auto& s : strs) c.push_back(bigint_from_decimal(s));
        return IntPolynomial(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// t^d * p(1/t): coefficient i moves to d - i. Requires degree(p) <= d.
inline IntPolynomial reverse(const IntPolynomial& p, int d) {
    if (p.degree() > d)
        throw_validation(errc::degree_exceeds_center,
                         "degree " + std::to_string(p.degree()) + " > center " + std::to_string(d));
    std::vector<BigInt> out(static_cast<std::size_t>(d) + 1, BigInt(0));
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(d - i)] = p.coeff(i);
    return IntPolynomial(std::move(out));
}

/// (1 + t)^k.
inline IntPolynomial one_plus_t_pow(int k) {
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c.push_back(binomial(k, i));
    return IntPolynomial(std::move(c));
}

inline bool is_nonnegative(const IntPolynomial& p) {
    for (const auto& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

inline bool is_palindromic(const IntPolynomial& p, int d) {
    if (p.degree() > d) return false;
    for (int i = 0; 2 * i <= d; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

/// Rise-then-fall over the stored coefficients a_0..a_deg.
inline bool is_unimodal(const IntPolynomial& p) {
    const auto& a = p.coeffs();
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return a.empty() || i == a.size() - 1;
}

/// Indices i < j < k with a_i, a_k nonzero and a_j = 0.
inline bool has_internal_zeros(const IntPolynomial& p) {
    const auto& a = p.coeffs();
    bool seen_nonzero = false, zero_after_nonzero = false;
    for (const auto& c : a) {
        if (c != 0) {
            if (zero_after_nonzero) return true;  // nonzero after a gap
            seen_nonzero = true;
        } else if (seen_nonzero) {
            zero_after_nonzero = true;
        }
    }
    return false;
}

inline bool is_log_concave_no_internal_zeros(const IntPolynomial& p) {
    if (has_internal_zeros(p)) return false;
    const auto& a = p.coeffs();
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
    return true;
}

/// Coefficients of a palindromic polynomial in the basis t^i (1+t)^(center-2i).
struct GammaVector {
    std::vector<BigInt> gammas;  // gamma_0 .. gamma_{floor(center/2)}
    int center = 0;

    bool is_gamma_positive() const {
        for (const auto& g : gammas)
            if (g < 0) return false;
        return true;
    }

    std::vector<std::string> to_decimal_strings() const {
        std::vector<std::string> out;
        out.reserve(gammas.size());
        for (const auto& g : gammas) out.push_back(to_decimal(g));
        return out;
    }
};

/// Unique expansion p = sum_i gamma_i t^i (1+t)^(d-2i); requires p palindromic
/// with center d/2.
inline GammaVector gamma_expansion(const IntPolynomial& p, int d) {
    if (!is_palindromic(p, d))
        throw_validation(errc::not_palindromic, "input is not palindromic at center " +
                                                    std::to_string(d) + "/2");
    GammaVector gv;
    gv.center = d;
    IntPolynomial rem = p;
    for (int i = 0; 2 * i <= d; ++i) {
        BigInt g = rem.coeff(i);
        gv.gammas.push_back(g);
        rem -= (g * one_plus_t_pow(d - 2 * i)).shifted(i);
    }
    if (!rem.is_zero())
        throw_internal(errc::internal_check, "gamma expansion left a nonzero remainder");
    return gv;
}

/// Reassemble sum_i gamma_i t^i (1+t)^(center-2i); inverse of gamma_expansion.
inline IntPolynomial gamma_reassemble(const GammaVector& gv) {
    IntPolynomial acc;
    for (std::size_t i = 0; i < gv.gammas.size(); ++i)
        acc += (gv.gammas[i] * one_plus_t_pow(gv.center - 2 * static_cast<int>(i)))
                   .shifted(static_cast<int>(i));
    return acc;
}

/// Sparse bivariate integer polynomial; only nonzero entries are stored.
class BiPolynomial {
public:
    using Key = std::pair<int, int>;  // (x exponent, y exponent)

    void add(int i, int j, const BigInt& v) {
        if (v == 0) return;
        auto [it, inserted] = c_.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    const BigInt& coeff(int i, int j) const {
        static const BigInt zero(0);
        auto it = c_.find({i, j});
        return it == c_.end() ? zero : it->second;
    }

    const std::map<Key, BigInt>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.c_ == b.c_; }

    /// Evaluate with x := xv (a univariate polynomial in t) and y := 0.
    IntPolynomial substitute_x_y0(const IntPolynomial& xv) const {
        IntPolynomial acc;
        for (const auto& [key, v] : c_) {
            if (key.second != 0) continue;  // y^j vanishes for j >= 1
            IntPolynomial pw = IntPolynomial::one();
            for (int e = 0; e < key.first; ++e) pw = pw * xv;
            acc += v * pw;
        }
        return acc;
    }

private:
    std::map<Key, BigInt> c_;
};

}  // namespace invz
