#ifndef CYCCUBIC_ARITH_HPP
#define CYCCUBIC_ARITH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyccubic/errors.hpp"

namespace cyccubic {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact rational from a (numerator, denominator) pair, any signs.
Rat make_rat(const BigInt& num, const BigInt& den);

/// Complete prime factorization of |N|, primes ascending. N = +-1 gives {}.
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;

    BigInt value() const; // product of p^e
};

/// Deterministic Miller-Rabin, exact for n < 3.3e24.
bool is_prime(const BigInt& n);

/// Trial division below 2^20, then Brent-cycle Pollard rho. N != 0.
Factorization factor(const BigInt& n);

/// v_p(x) for nonzero rational x; throws on x = 0.
long valuation(const Rat& x, const BigInt& p);
long valuation(BigInt x, const BigInt& p);

/// Legendre symbol (a/3): 0, +1, -1 for a = 0, 1, 2 mod 3.
int legendre3(const BigInt& a);

/// phi(x) - 1 for x >= 1.
BigInt euler_psi(const BigInt& x);

/// base^exp mod modulus, result in [0, modulus). modulus >= 1, exp >= 0.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

/// Unique (d, e, c) with d*e^2*c^3 = delta, d and e square-free, gcd(d,e)=1.
struct DecDec {
    BigInt d, e, c;
};
DecDec dec_factor(const BigInt& delta);

/// "3^4*7^2" style rendering of |n|; "1" for a unit.
std::string format_factored(const BigInt& n);

} // namespace cyccubic

#endif
