#include <doctest.h>

#include <random>

#include "sba/laurent.hpp"

using namespace sba;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F2 = FieldDescriptor::prime(2);
const FieldDescriptor F7 = FieldDescriptor::prime(7);

Poly poly_q(std::initializer_list<long long> coeffs) {
    std::vector<Scalar> v;
    for (long long c : coeffs) v.push_back(Scalar::from_int(Q, c));
    return Poly(Q, std::move(v));
}

LaurentTail tail_q(std::initializer_list<Scalar> coeffs) {
    return LaurentTail(Q, std::vector<Scalar>(coeffs));
}

} // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) ==
          Scalar::rational(5, 6));
    CHECK(Scalar::residue(7, 3) * Scalar::residue(7, 5) == Scalar::residue(7, 1));
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(2, 4).to_string() == "1/2");
    CHECK(Scalar::rational(-3, 1).to_string() == "-3");
    CHECK_THROWS_AS(Scalar::rational(1, 2) / Scalar::zero(Q), DivisionByZero);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F7), FieldMismatch);
}

TEST_CASE("scalar text round trip") {
    for (const char* s : {"0", "1", "-3", "5/6", "-7/3"})
        CHECK(Scalar::parse(Q, s).to_string() == s);
    CHECK(Scalar::parse(Q, "2/4").to_string() == "1/2");
    CHECK(Scalar::parse(F7, "12") == Scalar::residue(7, 5));
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
}

TEST_CASE("polynomial ring operations") {
    Poly xp1 = poly_q({1, 1});
    CHECK((xp1 + (-xp1)).is_zero());
    CHECK(xp1 * poly_q({-1, 1}) == poly_q({-1, 0, 1}));

    // characteristic 2: (x+1)^2 = x^2+1
    Poly xp1_f2(F2, {Scalar::residue(2, 1), Scalar::residue(2, 1)});
    Poly sq = xp1_f2 * xp1_f2;
    CHECK(sq == Poly(F2, {Scalar::residue(2, 1), Scalar::residue(2, 0),
                          Scalar::residue(2, 1)}));
}

TEST_CASE("abs_log returns the top degree") {
    CHECK(abs_log(poly_q({1, 0, 0, 1})) == ExtendedInt(3));
    CHECK(abs_log(Poly::zero(Q)).is_neg_infinity());

    LaurentElem e(Poly::zero(Q), tail_q({Scalar::zero(Q), Scalar::from_int(Q, 5),
                                         Scalar::zero(Q)}));
    CHECK(abs_log(e) == ExtendedInt(-2));
}

TEST_CASE("fractional part drops the polynomial part") {
    LaurentTail t = tail_q({Scalar::one(Q), Scalar::zero(Q)});
    CHECK(fractional_part(LaurentElem(poly_q({3, 0, 1}), t)) == t);
    // ker phi = K[x]
    LaurentElem pure_poly(poly_q({0, 1}), LaurentTail::zero(Q, 0));
    CHECK(fractional_part(pure_poly).known_zero());
    CHECK(fractional_part(pure_poly).precision() == 0);
}

TEST_CASE("norm_log finds the first nonzero index") {
    LaurentTail t = tail_q({Scalar::zero(Q), Scalar::from_int(Q, 3),
                            Scalar::zero(Q), Scalar::one(Q)});
    NormLog n = norm_log(t);
    CHECK(n.resolved);
    CHECK(n.value == ExtendedInt(-2));

    NormLog z = norm_log(LaurentTail::zero(Q, 3));
    CHECK_FALSE(z.resolved);
    CHECK(z.value.is_neg_infinity());
    CHECK(z.bound == -3);

    CHECK(norm_log(tail_q({Scalar::rational(1, 2)})).value == ExtendedInt(-1));
}

TEST_CASE("module action shifts and convolves") {
    auto a = [&](int i) { return Scalar::from_int(Q, i); };
    LaurentTail t = tail_q({a(4), a(5), a(6)});
    LaurentTail shifted = module_action(poly_q({0, 1}), t);
    CHECK(shifted.precision() == 2);
    CHECK(shifted.coeff(1) == a(5));
    CHECK(shifted.coeff(2) == a(6));

    CHECK(module_action(poly_q({1}), t) == t);

    // (x+1)(x^-1 + x^-2) over F2: poly part drops, tail (0, 1)
    LaurentTail tf2(F2, {Scalar::residue(2, 1), Scalar::residue(2, 1),
                         Scalar::residue(2, 0)});
    Poly pf2(F2, {Scalar::residue(2, 1), Scalar::residue(2, 1)});
    LaurentTail r = module_action(pf2, tf2);
    CHECK(r.precision() == 2);
    CHECK(r.coeff(1) == Scalar::residue(2, 0));
    CHECK(r.coeff(2) == Scalar::residue(2, 1));

    CHECK_THROWS_AS(module_action(poly_q({0, 0, 0, 0, 1}), t),
                    PrecisionExhausted);
}

TEST_CASE("ultrametric and multiplicativity properties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> len(0, 5);
    auto random_poly = [&] {
        std::vector<Scalar> v;
        int n = len(rng);
        for (int i = 0; i < n; ++i) v.push_back(Scalar::from_int(Q, coeff(rng)));
        return Poly(Q, std::move(v));
    };
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(), g = random_poly();
        ExtendedInt af = abs_log(f), ag = abs_log(g);
        CHECK(abs_log(f + g) <= max(af, ag));
        if (!(af == ag)) CHECK(abs_log(f + g) == max(af, ag));
        CHECK(abs_log(f * g) == af + ag);
        if (!(f == g)) CHECK(abs_log(f - g) >= ExtendedInt(0));
    }
}

TEST_CASE("fractional_part is additive at equal precision") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_elem = [&] {
        std::vector<Scalar> tail, poly;
        for (int i = 0; i < 4; ++i) tail.push_back(Scalar::from_int(Q, coeff(rng)));
        for (int i = 0; i < 3; ++i) poly.push_back(Scalar::from_int(Q, coeff(rng)));
        return LaurentElem(Poly(Q, std::move(poly)), LaurentTail(Q, std::move(tail)));
    };
    for (int trial = 0; trial < 100; ++trial) {
        LaurentElem f = random_elem(), g = random_elem();
        LaurentElem sum(f.poly_part + g.poly_part, f.tail + g.tail);
        CHECK(fractional_part(sum) == fractional_part(f) + fractional_part(g));
    }
}

TEST_CASE("module action is associative in the polynomial factor") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Scalar> tc;
        for (int i = 0; i < 10; ++i) tc.push_back(Scalar::from_int(Q, coeff(rng)));
        LaurentTail t(Q, std::move(tc));
        Poly p = poly_q({coeff(rng), coeff(rng)});
        if (p.is_zero()) continue; // the zero action keeps full precision
        Poly q = poly_q({coeff(rng), 1});
        CHECK(module_action(p * q, t) == module_action(p, module_action(q, t)));
    }
}

TEST_CASE("resolved norms land in the unit interval") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Scalar> tc;
        for (int i = 0; i < 5; ++i) tc.push_back(Scalar::from_int(Q, coeff(rng)));
        LaurentTail t(Q, std::move(tc));
        NormLog n = norm_log(t);
        if (n.resolved) CHECK(n.value <= ExtendedInt(-1));
    }
}

TEST_CASE("extended integers order NEG_INFINITY below everything") {
    ExtendedInt ni = ExtendedInt::neg_infinity();
    CHECK(ni < ExtendedInt(-1000000));
    CHECK((ni + 5).is_neg_infinity());
    CHECK(max(ni, ExtendedInt(3)) == ExtendedInt(3));
    CHECK_THROWS_AS(ni.value(), Error);
}
