// homcount: exact point counts for homogeneous spaces over finite fields
// Copyright 2026 The homcount Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homcount {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Error with a stable machine-readable kind tag; the CLI maps these to
// error objects, the library throws them on every contract violation.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, const std::string& kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

BigInt big_pow(const BigInt& base, unsigned long exp);
BigInt big_gcd(const BigInt& a, const BigInt& b);
BigInt big_lcm(const BigInt& a, const BigInt& b);
BigInt big_from_string(const std::string& s);

// Accepts "p" or "p/q"; result is canonicalized.
BigRat rat_from_string(const std::string& s);
std::string rat_to_string(const BigRat& r);

inline bool rat_is_integer(const BigRat& r) { return r.get_den() == 1; }

// Numerator of an exact integer rational.
BigInt rat_to_int(const BigRat& r);

long euler_phi(long n);

}  // namespace homcount
