#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sba/constructor.hpp"

using namespace sba;
using namespace sba::test;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor F3 = FieldDescriptor::prime(3);

bool same_report(const DefectReport& a, const DefectReport& b) {
    if (a.per_shape.size() != b.per_shape.size()) return false;
    for (size_t i = 0; i < a.per_shape.size(); ++i) {
        const auto& x = a.per_shape[i];
        const auto& y = b.per_shape[i];
        if (!(x.shape == y.shape) || x.dim != y.dim ||
            x.dirichlet_bound != y.dirichlet_bound || x.defect != y.defect)
            return false;
    }
    return a.c2_observed == b.c2_observed && a.c1_derived == b.c1_derived;
}
} // namespace

TEST_CASE("parallel defect scan reproduces the serial reference") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 8; ++trial) {
        TorusMatrix A = random_torus_matrix(rng, F3, 2, 2, 9);
        DefectReport serial = defect_scan(A, 5, 5, Exec::serial);
        DefectReport parallel = defect_scan(A, 5, 5, Exec::parallel);
        REQUIRE(same_report(serial, parallel));
    }
}

TEST_CASE("parallel star check reproduces the serial reference") {
    SUBCASE("certificate path") {
        TorusMatrix E(Q, 1, 2, 5);
        E.set(0, 0, exp_tail(Scalar::one(Q), 5));
        E.set(0, 1, exp_tail(Scalar::from_int(Q, 3), 5));
        StarResult s = star_check(E, 5, Exec::serial);
        StarResult p = star_check(E, 5, Exec::parallel);
        REQUIRE(s.ok());
        REQUIRE(p.ok());
        REQUIRE(s.certificate->checked_shapes.size() ==
                p.certificate->checked_shapes.size());
        for (size_t i = 0; i < s.certificate->checked_shapes.size(); ++i) {
            CHECK(s.certificate->checked_shapes[i].first ==
                  p.certificate->checked_shapes[i].first);
            CHECK(s.certificate->checked_shapes[i].second ==
                  p.certificate->checked_shapes[i].second);
        }
    }
    SUBCASE("failure path picks the same canonical witness") {
        std::mt19937_64 rng(52);
        int failures = 0;
        for (int trial = 0; trial < 200 && failures < 5; ++trial) {
            TorusMatrix A = random_torus_matrix(rng, F3, 1, 1, 6);
            StarResult s = star_check(A, 6, Exec::serial);
            StarResult p = star_check(A, 6, Exec::parallel);
            REQUIRE(s.ok() == p.ok());
            if (s.ok()) continue;
            CHECK(s.failure->shape == p.failure->shape);
            CHECK(s.failure->matrix == p.failure->matrix);
            ++failures;
        }
        CHECK(failures == 5);
    }
}

TEST_CASE("parallel min product reproduces the serial reference") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        TorusMatrix A = random_torus_matrix(rng, F3, 2, 2, 10);
        MinProductReport s = min_product_scan(A, 2, Exec::serial);
        MinProductReport p = min_product_scan(A, 2, Exec::parallel);
        REQUIRE(s.min_log.has_value() == p.min_log.has_value());
        if (s.min_log) {
            CHECK(*s.min_log == *p.min_log);
            CHECK(s.witness == p.witness);
        }
        REQUIRE(s.zero_forms.size() == p.zero_forms.size());
        for (size_t i = 0; i < s.zero_forms.size(); ++i) {
            CHECK(s.zero_forms[i].xi == p.zero_forms[i].xi);
            CHECK(s.zero_forms[i].row == p.zero_forms[i].row);
            CHECK(s.zero_forms[i].zero_to == p.zero_forms[i].zero_to);
        }
    }
}
