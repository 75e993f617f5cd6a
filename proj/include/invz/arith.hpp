#pragma once

// Exact scalar arithmetic. BigInt/Rational are GMP types; everything the
// rest of the library needs from them is funnelled through the helpers here
// so no other header touches gmpxx directly.

#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "invz/errors.hpp"

namespace invz {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(std::string_view s) {
    if (s.empty()) throw_validation(errc::parse_error, "empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw_validation(errc::parse_error, "sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw_validation(errc::parse_error, "bad integer literal '" + std::string(s) + "'");
    return BigInt(std::string(s), 10);
}

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw_validation(errc::validation, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact conversion; the caller is responsible for having checked integrality
// (closed forms turn a failure into NonIntegerCoefficient).
inline BigInt rational_to_integer(const Rational& q) {
    if (!is_integer(q))
        throw_internal(errc::non_integer_coefficient,
                       "expected integer, got " + q.get_str(10));
    return q.get_num();
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw_validation(errc::validation, "factorial of negative");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binomial(n, k) = 0 outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (n < 0) throw_validation(errc::validation, "binomial with negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// n! / (a_1! ... a_m!) with n = sum of parts; any negative part yields 0,
// mirroring the binomial convention.
inline BigInt multinomial(std::span<const long> parts) {
    long n = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        n += p;
    }
    BigInt r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

inline BigInt multinomial(std::initializer_list<long> parts) {
    return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

inline BigInt catalan(long n) {
    if (n < 0) throw_validation(errc::validation, "catalan of negative");
    return binomial(2 * n, n) / BigInt(n + 1);
}

}  // namespace invz
