#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qsym/errors.hpp"
#include "qsym/qfield.hpp"

using namespace qsym;

namespace {

QRat random_qrat(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), sh(-4, 4);
    auto poly = [&](bool nonzero) {
        while (true) {
            std::vector<mpz_class> c(deg(rng) + 1);
            for (auto& x : c) x = coef(rng);
            Poly p(c);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return QRat::fraction(poly(false), poly(true), sh(rng));
}

// Naive (q_d^m - q_d^-m)/(q_d - q_d^-1) built from the field operations only.
QRat qint_oracle(int m, int sd) {
    QRat v = QRat::s_pow(sd);
    return (v.pow(m) - v.pow(-m)) / (v - v.inverse());
}

}  // namespace

TEST_CASE("qint values") {
    CHECK(qint(1, 1) == QRat(1));
    CHECK(qint(2, 1) == QRat::q() + QRat::q_pow(-1));
    CHECK(qint_s(0, 3).is_zero());
    CHECK(qint(2, 1).str() == "q + q^-1");
    CHECK(qint_s(2, 1).str() == "s + s^-1");
}

TEST_CASE("qint matches field-operation oracle") {
    for (int sd : {1, 2, 3, 4, 6})
        for (int m = 0; m <= 12; ++m) {
            CHECK(qint_s(m, sd) == qint_oracle(m, sd));
            QRat v = QRat::s_pow(sd);
            CHECK(qint_s(m, sd) * (v - v.inverse()) == v.pow(m) - v.pow(-m));
            CHECK(specialize_q1(qint_s(m, sd)) == m);
        }
}

TEST_CASE("qbinom values") {
    CHECK(qbinom(5, 0) == QRat(1));
    CHECK(qbinom(2, 1) == QRat::q() + QRat::q_pow(-1));
    CHECK(qbinom(3, 1) == QRat::q_pow(2) + QRat(1) + QRat::q_pow(-2));
    CHECK_THROWS_AS(qbinom(2, 3), ArgumentError);
    for (int sd : {2, 4})
        for (int m = 0; m <= 8; ++m)
            for (int j = 0; j <= m; ++j) {
                QRat f = qfactorial_s(m, sd) / (qfactorial_s(j, sd) * qfactorial_s(m - j, sd));
                CHECK(qbinom_s(m, j, sd) == f);
                CHECK(qbinom_s(m, j, sd).is_laurent());
            }
}

TEST_CASE("sign") {
    QRat q = QRat::q();
    CHECK(sign(QRat()) == Sign::zero);
    CHECK(sign(q - QRat(1)) == Sign::positive);
    CHECK(sign(QRat(2) - q) == Sign::positive);
    CHECK(sign(QRat(1) - q) == Sign::negative);
    CHECK(sign((q - 1) * (q - 1)) == Sign::positive);
    CHECK(sign(QRat(1) / (q - 1)) == Sign::positive);
    CHECK(sign(-(qint(3) - QRat(3))) == Sign::negative);  // [3] - 3 = (q-1)^2 (...)/q
}

TEST_CASE("specialization") {
    QRat q = QRat::q();
    CHECK(specialize_q1(q) == 1);
    CHECK(specialize_q1((q * q - 1) / (q - 1)) == 2);
    CHECK_THROWS_AS(specialize_q1(QRat(1) / (q - 1)), PoleError);
    CHECK(specialize_q1(QRat(3) / (QRat(2) * q + 1)) == 1);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int it = 0; it < 150; ++it) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == QRat(1));
        CHECK((a + b) * (a - b) == a * a - b * b);
        int s1 = static_cast<int>(sign(a - b)), s2 = static_cast<int>(sign(b - a));
        CHECK(s1 == -s2);
        CHECK(static_cast<int>(sign(a * b)) == static_cast<int>(sign(a)) * static_cast<int>(sign(b)));
        if (sign(a) == Sign::positive && sign(b) == Sign::positive) CHECK(sign(a + b) == Sign::positive);
        CHECK(a.hash() == (a + b - b).hash());
    }
}

TEST_CASE("parse and print") {
    CHECK(parse_qrat("(q^2-1)/(q-1)") == QRat::q() + QRat(1));
    CHECK(parse_qrat("q^-1 + 2q") == QRat::q_pow(-1) + QRat(2) * QRat::q());
    CHECK(parse_qrat("s^2") == QRat::q());
    CHECK(parse_qrat("-3") == QRat(-3));
    CHECK_THROWS_AS(parse_qrat("q +"), ParseError);
    CHECK_THROWS_AS(parse_qrat("x"), ParseError);
    CHECK_THROWS_AS(parse_qrat("1/(q-q)"), ParseError);
    CHECK(QRat(1).str() == "1");
    CHECK(parse_qrat("1/(q - q^-1)").str() == "1/(q - q^-1)");
    CHECK(parse_qrat("2q^2").str() == "2*q^2");
    CHECK(parse_qrat("s-1").str() == "s - 1");
    for (const char* t : {"q^3 - 2*q + q^-4", "(s + 1)/(s^2 + 3)", "-q/(q^2 + 1)"}) {
        QRat v = parse_qrat(t);
        CHECK(parse_qrat(v.str()) == v);
    }
}
