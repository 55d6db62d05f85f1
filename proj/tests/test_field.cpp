#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projrigid/field.hpp"

using namespace projrigid;

namespace {

FieldElement fe(int a, int b, int c, int e, int d) {
    return FieldElement(Rational(a), Rational(b), Rational(c), Rational(e), d);
}

}  // namespace

TEST_CASE("construction and normalization") {
    FieldElement zero;
    CHECK(zero.is_zero());
    CHECK(zero.tag() == 0);

    FieldElement three(3);
    CHECK(three.a() == 3);
    CHECK(three.is_rational());

    // d = 1 folds the sqrt parts into the rational parts.
    FieldElement folded = fe(1, 2, 3, 4, 1);
    CHECK(folded.a() == 3);
    CHECK(folded.b() == 0);
    CHECK(folded.c() == 7);
    CHECK(folded.e() == 0);
    CHECK(folded.tag() == 1);

    // A vanished sqrt part drops back to the universal rational tag.
    FieldElement dropped = fe(5, 0, -2, 0, 3);
    CHECK(dropped.tag() == 0);
    FieldElement kept = fe(5, 1, 0, 0, 3);
    CHECK(kept.tag() == 3);
}

TEST_CASE("tag unification") {
    FieldElement r3 = FieldElement::sqrtd(3);
    FieldElement r5 = FieldElement::sqrtd(5);
    CHECK((r3 + FieldElement(2)).tag() == 3);
    CHECK((FieldElement(2) * r3).tag() == 3);
    CHECK_THROWS_AS((void)(r3 + r5), PreconditionError);
    CHECK_THROWS_AS((void)(r3 == r5), PreconditionError);
}

TEST_CASE("arithmetic in Q(i, sqrt(3))") {
    FieldElement r = FieldElement::sqrtd(3);
    FieldElement i = FieldElement::imag_unit();
    CHECK(r * r == FieldElement(3));
    CHECK(i * i == FieldElement(-1));
    CHECK((i * r) * (i * r) == FieldElement(-3));
    FieldElement x = fe(1, 2, 3, 4, 3);
    FieldElement y = fe(-2, 1, 0, 5, 3);
    CHECK(x + y == fe(-1, 3, 3, 9, 3));
    CHECK(x - y == fe(3, 1, 3, -1, 3));
    CHECK(x * y == y * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("inverse against the Galois-norm formula") {
    // (1 - i*sqrt(3)) / 2 has inverse (1 + i*sqrt(3)) / 2.
    FieldElement x(Rational(1, 2), 0, 0, Rational(-1, 2), 3);
    CHECK(x.inv() == FieldElement(Rational(1, 2), 0, 0, Rational(1, 2), 3));
    // 1 + sqrt(3) has inverse (-1 + sqrt(3)) / 2.
    FieldElement y(1, 1, 0, 0, 3);
    CHECK(y.inv() == FieldElement(Rational(-1, 2), Rational(1, 2), 0, 0, 3));

    FieldElement z = fe(2, -1, 4, 7, 3);
    CHECK(z * z.inv() == FieldElement(1));
    CHECK(z / z == FieldElement(1));
    CHECK_THROWS_AS((void)FieldElement(0).inv(), PreconditionError);
}

TEST_CASE("conjugations") {
    FieldElement x = fe(1, 2, 3, 4, 3);
    CHECK(x.conj_i() == fe(1, 2, -3, -4, 3));
    CHECK(x.conj_sqrt() == fe(1, -2, 3, -4, 3));
    CHECK(x.conj_i().conj_i() == x);
    CHECK((x * x.conj_i()).is_real());
    FieldElement norm = x * x.conj_i() * (x * x.conj_i()).conj_sqrt();
    CHECK(norm.is_rational());
}

TEST_CASE("predicates and float image") {
    CHECK(fe(1, 0, 0, 0, 3).is_real());
    CHECK(!fe(1, 0, 1, 0, 3).is_real());
    CHECK(fe(1, 1, 0, 0, 3).is_real());
    CHECK(!fe(1, 1, 0, 0, 3).is_rational());
    FieldElement x(Rational(1, 2), Rational(1, 3), Rational(-2), Rational(1), 3);
    double re = 0.5 + (1.0 / 3.0) * std::sqrt(3.0);
    double im = -2.0 + std::sqrt(3.0);
    CHECK(std::abs(x.real_part() - re) < 1e-12);
    CHECK(std::abs(x.imag_part() - im) < 1e-12);
}
