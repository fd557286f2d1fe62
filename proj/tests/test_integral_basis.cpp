#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyccubic/integral_basis.hpp"

using namespace cyccubic;

TEST_CASE("transform: reference values")
{
    {
        const CubicField f(0, 1);
        const auto td = transform(f, classify(f));
        CHECK(td.m == 3);
        CHECK(td.a == -3);
        CHECK(td.b == -1);
    }
    {
        const CubicField f(1, 2);
        const auto td = transform(f, classify(f));
        CHECK(td.m == 1);
        CHECK(td.a == -129);
        CHECK(td.b == -344);
    }
    {
        const CubicField f(3, 7);
        const auto td = transform(f, classify(f));
        CHECK(td.m == 9);
        CHECK(td.a == -19);
        CHECK(td.b == -19);
    }
}

TEST_CASE("theta has minimal polynomial X^3 + aX + b across a sweep")
{
    for (int n1 = -20; n1 <= 20; ++n1)
        for (int n2 = 1; n2 <= 10; ++n2) {
            if (gcd(BigInt(n1), BigInt(n2)) != 1)
                continue;
            try {
                const CubicField f(n1, n2);
                const auto inv = classify(f);
                const auto td = transform(f, inv); // internally asserts minpoly
                CHECK(f.minpoly(theta_element(inv))
                      == std::vector<Rat>{Rat(td.b), Rat(td.a), Rat(0), Rat(1)});
            } catch (const reducible_error&) {
            }
        }
}

TEST_CASE("albert_params: closed forms match the factorization")
{
    {
        const CubicField f(0, 1);
        const auto inv = classify(f);
        const auto ap = albert_params(inv, transform(f, inv));
        CHECK(ap.lambda == 0);
        CHECK(ap.mu == 2);
        CHECK(ap.p_part == 1);
        CHECK(ap.q_part == 1);
        CHECK(ap.delta_prime == -1); // 4(-27) + 27 = -81 = 3^4 * (-1)
    }
    {
        const CubicField f(1, 2);
        const auto inv = classify(f);
        const auto ap = albert_params(inv, transform(f, inv));
        CHECK(ap.lambda == 1);
        CHECK(ap.mu == 3);
        CHECK(ap.p_part == 1);
        CHECK(ap.q_part == 1);
        CHECK(ap.delta_prime == -BigInt(43) * 43);
    }
    {
        const CubicField f(7, 11);
        const auto inv = classify(f);
        const auto ap = albert_params(inv, transform(f, inv));
        CHECK(ap.q_part == 11);
    }
    // Identity 4a^3 + 27b^2 = 2^{2 lambda} 3^{2 mu} P^2 Q^2 delta' on a sweep.
    for (int n1 = -20; n1 <= 20; ++n1)
        for (int n2 = 1; n2 <= 10; ++n2) {
            if (gcd(BigInt(n1), BigInt(n2)) != 1)
                continue;
            try {
                const CubicField f(n1, n2);
                const auto inv = classify(f);
                const auto td = transform(f, inv);
                const auto ap = albert_params(inv, td);
                BigInt lhs = 4 * td.a * td.a * td.a + 27 * td.b * td.b;
                BigInt rhs = ap.delta_prime * ap.p_part * ap.p_part * ap.q_part
                           * ap.q_part;
                for (int i = 0; i < 2 * ap.lambda; ++i)
                    rhs *= 2;
                for (int i = 0; i < 2 * ap.mu; ++i)
                    rhs *= 3;
                CHECK(lhs == rhs);
            } catch (const reducible_error&) {
            }
        }
}

TEST_CASE("compute_r and basis for (0,1)")
{
    const CubicField f(0, 1);
    const auto inv = classify(f);
    const auto td = transform(f, inv);
    const auto ap = albert_params(inv, td);
    const BigInt u = psi_denominator(inv);
    CHECK(u == 9); // 3 * e * c^2 * n2 with e = 3
    const BigInt r = compute_r(inv, td, ap, u);
    CHECK(r == 4); // -(-1)[3*(2*(-3))^0 + 1] = 4, already in [0, 27)
    const auto ib = basis(f, inv);
    CHECK(ib.phi == fe_rho());
    CHECK(ib.psi == FieldElement{{Rat(13), Rat(4), Rat(1)}}); // rho^2+4rho+13
    CHECK(f.disc_triple(ib.one, ib.phi, ib.psi) == 81);
}

TEST_CASE("basis discriminants match the reference tables")
{
    {
        const CubicField f(1, 2);
        const auto ib = basis(f, classify(f));
        CHECK(f.disc_triple(ib.one, ib.phi, ib.psi) == BigInt(43) * 43);
    }
    {
        const CubicField f(6, 11);
        const auto ib = basis(f, classify(f));
        CHECK(f.disc_triple(ib.one, ib.phi, ib.psi) == BigInt(81) * 49);
    }
}

TEST_CASE("r-stability: r and r + 3u give the same lattice")
{
    for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{
             {1, 2}, {3, 7}, {6, 11}, {-5, 7}, {4, 5}, {0, 1}, {7, 11}}) {
        const CubicField f(n1, n2);
        const auto inv = classify(f);
        const auto td = transform(f, inv);
        const auto ib = basis(f, inv);
        const BigInt r2 = ib.r + 3 * ib.u;
        const BigInt &m = inv.m;
        FieldElement phi2 = ib.phi;
        if (inv.n1 % 3 != 0)
            phi2 = {{make_rat(-inv.n1 - m * r2, 3 * m), make_rat(3 * inv.n2, 3 * m), Rat(0)}};
        const FieldElement psi2{
            {make_rat(m * m * r2 * r2 + m * m * td.a - m * inv.n1 * r2 + inv.n1 * inv.n1, ib.u),
             make_rat(3 * inv.n2 * (m * r2 - 2 * inv.n1), ib.u),
             make_rat(9 * inv.n2 * inv.n2, ib.u)}};
        CHECK(f.is_integral(phi2));
        CHECK(f.is_integral(psi2));
        const std::array<FieldElement, 3> base{ib.one, ib.phi, ib.psi};
        CHECK(f.lattice_index(base, {ib.one, phi2, psi2}) == 1);
    }
}

TEST_CASE("albert_oracle: precondition and equivalence")
{
    CHECK_THROWS_AS(albert_oracle(4, 8), precondition_error); // p = 2 violates
    CHECK_THROWS_AS(albert_oracle(-7, 6), precondition_error); // X^3-7X+6 reducible

    // Oracle image spans the same lattice as the direct basis.
    for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{
             {1, 2}, {3, 7}, {6, 11}, {-5, 7}, {0, 1}, {10, 11}, {-9, 11}}) {
        const CubicField f(n1, n2);
        const auto inv = classify(f);
        const auto td = transform(f, inv);
        const auto ib = basis(f, inv);
        const auto oracle = albert_oracle(td.a, td.b);
        const FieldElement theta = theta_element(inv);
        const FieldElement theta2 = f.mul(theta, theta);
        std::array<FieldElement, 3> mapped;
        for (int i = 0; i < 3; ++i) {
            FieldElement x = fe_const(oracle[i][0]);
            x = f.add(x, f.smul(oracle[i][1], theta));
            x = f.add(x, f.smul(oracle[i][2], theta2));
            mapped[i] = x;
            CHECK(f.is_integral(x));
        }
        const std::array<FieldElement, 3> base{ib.one, ib.phi, ib.psi};
        for (const FieldElement& v : mapped)
            for (const Rat& q : f.coords_in_basis(base, v))
                CHECK(denominator(q) == 1);
        CHECK(f.lattice_index(base, mapped) == 1);
    }
}
