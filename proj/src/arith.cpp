#include "cyccubic/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cyccubic {

Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw zero_denominator_error("zero denominator");
    return Rat(num) / Rat(den);
}

BigInt Factorization::value() const
{
    BigInt v = 1;
    for (const auto& [p, e] : primes)
        for (unsigned i = 0; i < e; ++i)
            v *= p;
    return v;
}

namespace {

constexpr std::uint32_t kTrialLimit = 1u << 20;

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s)
{
    BigInt x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return false;
    }
    return true; // composite witness
}

// Brent's variant; n odd composite, not a prime power of a small prime.
BigInt pollard_brent(const BigInt& n)
{
    if (n % 2 == 0)
        return 2;
    // Deterministic parameter sequence; retries change (y0, c).
    for (std::uint64_t salt = 1;; ++salt) {
        BigInt y = BigInt(2) + salt;
        BigInt c = BigInt(1) + salt * 2;
        BigInt m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i)
                y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = std::min(m, BigInt(r - k));
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

bool is_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Witness set valid below 3.3 * 10^24.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, a, d, s))
            return false;
    return true;
}

Factorization factor(const BigInt& n)
{
    if (n == 0)
        throw precondition_error("factor: N must be nonzero");
    BigInt m = abs(n);
    std::map<BigInt, unsigned> acc;
    for (std::uint32_t p = 2; p <= kTrialLimit && BigInt(p) * p <= m; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            ++acc[p];
            m /= p;
        }
    }
    if (m > 1) {
        if (m <= BigInt(kTrialLimit) * kTrialLimit)
            ++acc[m]; // below square of the trial bound, so prime
        else
            factor_into(m, acc);
    }
    Factorization f;
    f.primes.assign(acc.begin(), acc.end());
    return f;
}

long valuation(BigInt x, const BigInt& p)
{
    if (x == 0)
        throw precondition_error("valuation: x must be nonzero");
    x = abs(x);
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long valuation(const Rat& x, const BigInt& p)
{
    if (x == 0)
        throw precondition_error("valuation: x must be nonzero");
    return valuation(numerator(x), p) - valuation(denominator(x), p);
}

int legendre3(const BigInt& a)
{
    BigInt m = a % 3;
    if (m < 0)
        m += 3;
    if (m == 0)
        return 0;
    return m == 1 ? 1 : -1;
}

BigInt euler_psi(const BigInt& x)
{
    if (x < 1)
        throw precondition_error("euler_psi: x must be positive");
    BigInt phi = 1;
    for (const auto& [p, e] : factor(x).primes) {
        BigInt pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i)
            pe *= p;
        phi *= pe * (p - 1);
    }
    return phi - 1;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus)
{
    if (modulus < 1)
        throw precondition_error("mod_pow: modulus must be positive");
    if (exp < 0)
        throw precondition_error("mod_pow: exponent must be nonnegative");
    BigInt b = base % modulus;
    if (b < 0)
        b += modulus;
    return boost::multiprecision::powm(b, exp, modulus);
}

DecDec dec_factor(const BigInt& delta)
{
    if (delta < 1)
        throw precondition_error("dec_factor: delta must be positive");
    DecDec r{1, 1, 1};
    for (const auto& [p, e] : factor(delta).primes) {
        unsigned q = e / 3, s = e % 3;
        for (unsigned i = 0; i < q; ++i)
            r.c *= p;
        if (s == 1)
            r.d *= p;
        else if (s == 2)
            r.e *= p;
    }
    return r;
}

std::string format_factored(const BigInt& n)
{
    BigInt m = abs(n);
    if (m == 1)
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factor(m).primes) {
        if (!first)
            os << '*';
        first = false;
        os << p;
        if (e > 1)
            os << '^' << e;
    }
    return os.str();
}

} // namespace cyccubic
