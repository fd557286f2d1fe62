#include "cyccubic/eisenstein.hpp"

#include <sstream>

namespace cyccubic {

Eis e_add(const Eis& x, const Eis& y) { return {x.a + y.a, x.b + y.b}; }
Eis e_sub(const Eis& x, const Eis& y) { return {x.a - y.a, x.b - y.b}; }
Eis e_neg(const Eis& x) { return {-x.a, -x.b}; }

Eis e_mul(const Eis& x, const Eis& y)
{
    // (a + b z)(c + d z), z^2 = -1 - z
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

Eis e_conj(const Eis& x) { return {x.a - x.b, -x.b}; }

BigInt e_norm(const Eis& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

bool is_zero(const Eis& x) { return x.a == 0 && x.b == 0; }

std::array<Eis, 6> associates(const Eis& x)
{
    const Eis zx = e_mul({0, 1}, x);
    const Eis z2x = e_mul({0, 1}, zx);
    return {x, zx, z2x, e_neg(x), e_neg(zx), e_neg(z2x)};
}

namespace {

// Round t/n to the nearest integer, ties toward -infinity. n > 0.
BigInt round_div(const BigInt& t, const BigInt& n)
{
    BigInt q = t / n, r = t % n;
    if (r < 0) {
        q -= 1;
        r += n;
    }
    return 2 * r > n ? q + 1 : q;
}

} // namespace

std::pair<Eis, Eis> e_divmod(const Eis& x, const Eis& y)
{
    if (is_zero(y))
        throw precondition_error("e_divmod: division by zero");
    const BigInt n = e_norm(y);
    const Eis num = e_mul(x, e_conj(y));
    const Eis q{round_div(num.a, n), round_div(num.b, n)};
    const Eis r = e_sub(x, e_mul(q, y));
    return {q, r};
}

bool e_divides(const Eis& y, const Eis& x)
{
    return e_divmod(x, y).second == Eis{0, 0};
}

Eis e_gcd(Eis x, Eis y)
{
    if (is_zero(x) && is_zero(y))
        throw precondition_error("e_gcd: both arguments zero");
    while (!is_zero(y)) {
        Eis r = e_divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical(x);
}

Eis canonical(const Eis& x)
{
    if (is_zero(x))
        throw precondition_error("canonical: zero has no canonical associate");
    for (const Eis& c : associates(x))
        if (c.a > c.b && c.b >= 0)
            return c;
    throw internal_inconsistency_error("canonical: no associate in the sextant");
}

Eis e_pow(const Eis& x, const BigInt& k)
{
    if (k < 0)
        throw precondition_error("e_pow: negative exponent");
    Eis r{1, 0};
    for (BigInt i = 0; i < k; ++i)
        r = e_mul(r, x);
    return r;
}

BigInt sqrt_mod(const BigInt& a0, const BigInt& p)
{
    BigInt a = a0 % p;
    if (a < 0)
        a += p;
    if (a == 0)
        return 0;
    if (mod_pow(a, (p - 1) / 2, p) != 1)
        throw precondition_error("sqrt_mod: non-residue");
    if (p % 4 == 3)
        return mod_pow(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    BigInt q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    BigInt z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1)
        ++z;
    BigInt m = s, c = mod_pow(z, q, p);
    BigInt t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        BigInt i = 0, tt = t;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        BigInt b = c;
        for (BigInt j = 0; j < m - i - 1; ++j)
            b = (b * b) % p;
        m = i;
        c = (b * b) % p;
        t = (t * c) % p;
        r = (r * b) % p;
    }
    return r;
}

Eis split_prime(const BigInt& p)
{
    if (!is_prime(p) || p % 3 != 1)
        throw precondition_error("split_prime: p must be a prime with p = 1 mod 3");
    // (1 + 2z)^2 = -3, so s^2 = -3 mod p makes s - (1+2z) a zero divisor mod p.
    const BigInt s = sqrt_mod(-3, p);
    Eis g = e_gcd({p, 0}, {s - 1, -2});
    if (e_norm(g) != p)
        throw internal_inconsistency_error("split_prime: gcd has wrong norm");
    return g;
}

std::string to_string(const Eis& x)
{
    std::ostringstream os;
    os << x.a;
    if (x.b >= 0)
        os << '+';
    os << x.b << "*z";
    return os.str();
}

} // namespace cyccubic
