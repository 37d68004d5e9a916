// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#include "homcount/arith.hpp"

namespace homcount {

BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt big_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        fail("parse", "not a decimal integer: '" + s + "'");
    }
}

BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(big_from_string(s));
    BigInt num = big_from_string(s.substr(0, slash));
    BigInt den = big_from_string(s.substr(slash + 1));
    require(den != 0, "zero_denominator", "rational with zero denominator: '" + s + "'");
    BigRat out(num, den);
    out.canonicalize();
    return out;
}

std::string rat_to_string(const BigRat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt rat_to_int(const BigRat& r) {
    require(rat_is_integer(r), "not_integral", "expected an integer, got " + rat_to_string(r));
    return r.get_num();
}

long euler_phi(long n) {
    require(n >= 1, "domain", "euler_phi requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace homcount
