// Exact arithmetic primitives. All linear algebra in this library runs over
// Z (GMP integers) or over a prime field; nothing is ever done in floating
// point. The few combinatorial helpers here are the ones the representation
// code leans on constantly.
#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "chevjor/errors.hpp"

namespace chevjor {

using Int = mpz_class;
using Rat = mpq_class;

// Falling-factorial binomial, valid for arbitrary (possibly negative) integer
// tops: binom(m, k) = m(m-1)...(m-k+1) / k!. This is the form that appears in
// the divided-power commutation identities, where the top is a shifted weight
// value and can be negative.
inline Int binomial(const Int& m, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long j = 0; j < k; ++j) num *= m - j;
    Int den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    check_internal(r == 0, "binomial: k! does not divide falling factorial");
    return q;
}

inline Int factorial(long n) {
    require(n >= 0, "factorial of a negative number");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Exact quotient; throws if the division has a remainder. Used wherever a
// divisibility claim is part of an invariant (divided powers, lattice solves).
inline Int exact_div(const Int& a, const Int& b, const char* where) {
    check_internal(b != 0, std::string("exact_div by zero in ") + where);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    check_internal(r == 0, std::string("exact_div: not divisible in ") + where);
    return q;
}

inline long to_long(const Int& a) {
    check_internal(a.fits_slong_p(), "integer out of machine range");
    return a.get_si();
}

// p^e for machine-sized inputs, as a GMP integer (orders of unipotent
// elements can exceed 64 bits only in principle; we keep them exact anyway).
inline Int int_pow(long base, long exp) {
    require(exp >= 0, "int_pow with negative exponent");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

} // namespace chevjor
