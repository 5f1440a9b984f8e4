#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qsym {

// Dense integer polynomial in s; coeffs[k] multiplies s^k, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> c);
    static Poly constant(const mpz_class& c);
    static Poly monomial(const mpz_class& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& operator[](int k) const { return c_[k]; }
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    int low_order() const;  // exponent of the lowest nonzero term

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpz_class& k) const;
    Poly shifted(int k) const;  // multiply by s^k; k may be negative if exact
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    mpz_class content() const;
    Poly primitive() const;
    mpq_class eval(const mpq_class& x) const;
    mpz_class eval1() const;  // value at s = 1

    // Exact division; throws if the remainder is nonzero.
    Poly exact_div(const Poly& d) const;
    static Poly gcd(const Poly& a, const Poly& b);

private:
    std::vector<mpz_class> c_;
    void trim();
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Element of Q(s), q = s^2, stored as s^e * num / den with num(0) != 0,
// den(0) != 0, gcd(num, den) = 1 in Z[s] and lc(den) > 0.
class QRat {
public:
    QRat();
    QRat(long v);  // NOLINT: implicit from integers is convenient
    QRat(const mpz_class& v);
    static QRat from_poly(const Poly& num, int shift = 0);
    static QRat fraction(const Poly& num, const Poly& den, int shift = 0);
    static QRat q_pow(long k);  // q^k = s^{2k}
    static QRat s_pow(long k);
    static QRat q() { return q_pow(1); }
    static QRat s() { return s_pow(1); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.degree() == 0; }
    bool is_monomial() const { return is_laurent() && num_.degree() == 0; }
    int shift() const { return e_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator-() const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }
    QRat inverse() const;
    QRat pow(long k) const;
    bool operator==(const QRat& o) const;
    bool operator!=(const QRat& o) const { return !(*this == o); }

    size_t hash() const;
    std::string str() const;

private:
    int e_ = 0;
    Poly num_;
    Poly den_;
    void normalize();
};

// [m]_{q^d} = (q_d^m - q_d^{-m}) / (q_d - q_d^{-1}); d given in s-powers (q^d = s^{sd}).
QRat qint_s(int m, int sd);
QRat qint(int m, int d = 1);  // d an integer multiple of q
QRat qfactorial_s(int m, int sd);
QRat qbinom_s(int m, int j, int sd);
QRat qbinom(int m, int j, int d = 1);

Sign sign(const QRat& f);
mpq_class specialize_q1(const QRat& f);  // throws PoleError

QRat parse_qrat(const std::string& text);

}  // namespace qsym
