#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sba/constructor.hpp"
#include "sba/criterion.hpp"
#include "sba/series.hpp"

using namespace sba;
using namespace sba::test;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();

TorusMatrix ones_tail_matrix(int precision) {
    TorusMatrix A(Q, 1, 1, precision);
    A.set(0, 0, LaurentTail(Q, std::vector<Scalar>(
                                   static_cast<size_t>(precision),
                                   Scalar::one(Q))));
    return A;
}
} // namespace

TEST_CASE("exponential tail coefficients are lambda^i / i!") {
    LaurentTail t = exp_tail(Scalar::one(Q), 4);
    CHECK(t.coeff(1) == Scalar::one(Q));
    CHECK(t.coeff(2) == Scalar::rational(1, 2));
    CHECK(t.coeff(3) == Scalar::rational(1, 6));
    CHECK(t.coeff(4) == Scalar::rational(1, 24));

    CHECK(exp_tail(Scalar::zero(Q), 3).known_zero());

    LaurentTail two = exp_tail(Scalar::from_int(Q, 2), 3);
    CHECK(two.coeff(1) == Scalar::from_int(Q, 2));
    CHECK(two.coeff(2) == Scalar::from_int(Q, 2));
    CHECK(two.coeff(3) == Scalar::rational(4, 3));

    CHECK_THROWS_AS(exp_tail(Scalar::residue(5, 1), 3), PositiveCharacteristic);
}

TEST_CASE("binomial tail coefficients are (-1)^i binom(w,i)") {
    LaurentTail half = binomial_tail(Scalar::rational(1, 2), 3);
    CHECK(half.coeff(1) == Scalar::rational(-1, 2));
    CHECK(half.coeff(2) == Scalar::rational(-1, 8));
    CHECK(half.coeff(3) == Scalar::rational(-1, 16));

    CHECK(binomial_tail(Scalar::zero(Q), 3).known_zero());

    LaurentTail geo = binomial_tail(Scalar::from_int(Q, -1), 3);
    for (int i = 1; i <= 3; ++i) CHECK(geo.coeff(i) == Scalar::one(Q));
}

TEST_CASE("integer exponent terminates the binomial series") {
    LaurentTail t = binomial_tail(Scalar::from_int(Q, 2), 6);
    CHECK_FALSE(t.coeff(1).is_zero());
    CHECK_FALSE(t.coeff(2).is_zero());
    for (int i = 3; i <= 6; ++i) CHECK(t.coeff(i).is_zero());

    // the terminating tail is rational-like; a large enough window is singular
    TorusMatrix A(Q, 1, 1, 6);
    A.set(0, 0, t);
    CHECK_FALSE(star_check(A, 6).ok());
}

TEST_CASE("star check certifies the exponential element") {
    TorusMatrix A(Q, 1, 1, 5);
    A.set(0, 0, exp_tail(Scalar::one(Q), 5));
    StarResult r = star_check(A, 5);
    REQUIRE(r.ok());
    bool saw_2x2 = false;
    for (const auto& [shape, det] : r.certificate->checked_shapes) {
        CHECK_FALSE(det.is_zero());
        if (shape == ShapeProfile{{2}, {2}}) {
            CHECK(det == Scalar::rational(-1, 12));
            saw_2x2 = true;
        }
    }
    CHECK(saw_2x2);
}

TEST_CASE("star check fails on the all-ones tail with the smallest witness") {
    StarResult r = star_check(ones_tail_matrix(3), 3);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->shape == ShapeProfile{{2}, {2}});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(r.failure->matrix.at(i, j) == Scalar::one(Q));
}

TEST_CASE("star check agrees with the generated certificate") {
    GenerateResult g = generate(Q, 1, 1, 5);
    StarResult r = star_check(g.matrix, 5);
    REQUIRE(r.ok());
    REQUIRE(r.certificate->checked_shapes.size() ==
            g.certificate.checked_shapes.size());
    for (size_t i = 0; i < g.certificate.checked_shapes.size(); ++i) {
        CHECK(r.certificate->checked_shapes[i].first ==
              g.certificate.checked_shapes[i].first);
        CHECK(r.certificate->checked_shapes[i].second ==
              g.certificate.checked_shapes[i].second);
    }
}

TEST_CASE("star check transposes cleanly") {
    TorusMatrix A(Q, 1, 2, 4);
    A.set(0, 0, exp_tail(Scalar::one(Q), 4));
    A.set(0, 1, exp_tail(Scalar::from_int(Q, 3), 4));
    StarResult fwd = star_check(A, 4);
    StarResult bwd = star_check(A.transposed(), 4);
    REQUIRE(fwd.ok());
    REQUIRE(bwd.ok());
    REQUIRE(fwd.certificate->checked_shapes.size() ==
            bwd.certificate->checked_shapes.size());
    for (const auto& [shape, det] : fwd.certificate->checked_shapes) {
        bool found = false;
        for (const auto& [tshape, tdet] : bwd.certificate->checked_shapes)
            if (tshape == shape.transposed()) found = true;
        CHECK(found);
    }
}

TEST_CASE("doubled exponential parameters break the star property") {
    // e^{2/x} = (e^{1/x})^2: the pair (1, 2) has the singular window
    // (1,2;3), killed by xi = (-4/3, x - 1/3)
    TorusMatrix A(Q, 1, 2, 5);
    A.set(0, 0, exp_tail(Scalar::one(Q), 5));
    A.set(0, 1, exp_tail(Scalar::from_int(Q, 2), 5));
    StarResult r = star_check(A, 4);
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->shape == ShapeProfile{{1, 2}, {3}});

    ShapeProfile bad{{1, 2}, {3}};
    CHECK(solution_dim(A, bad) == 1);
    PolyVector xi{{Poly::constant(Scalar::rational(-4, 3)),
                   Poly(Q, {Scalar::rational(-1, 3), Scalar::one(Q)})}};
    CHECK(in_solution_space(A, bad, xi));
}

TEST_CASE("a star window forces full rank on rectangular shapes") {
    TorusMatrix A(Q, 1, 1, 6);
    A.set(0, 0, exp_tail(Scalar::one(Q), 6));
    REQUIRE(star_check(A, 6).ok());
    for (int u = 0; u <= 3; ++u)
        for (int v = 0; v <= 3; ++v) {
            ShapeProfile shape{{u}, {v}};
            const ExactMatrix& m = assemble_block(A, shape).matrix;
            CHECK(exact_rank(m) == std::min(u, v));
            CHECK(minor_rank(m) == std::min(u, v));
        }
}

TEST_CASE("distinct small parameters keep windows nonsingular") {
    for (long long num : {1, 2}) {
        for (long long den : {1, 2}) {
            if (num == 2 && den == 2) continue; // 1 repeats
            Scalar lambda = Scalar::rational(num, den);
            LaurentTail t = exp_tail(lambda, 8);
            for (int k = 1; k <= 4; ++k)
                CHECK_FALSE(exact_det(hankel_window(t, k, k)).is_zero());
        }
    }
}
