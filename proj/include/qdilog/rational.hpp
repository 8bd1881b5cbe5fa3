#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdilog {

// Exact rational arithmetic on int64 with gcd normalization.
// Intermediates go through __int128; anything that cannot be reduced
// back into int64 throws instead of silently wrapping.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        normalize_from(n, d);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        __int128 n = i128(x.num_) * y.den_ + i128(y.num_) * x.den_;
        __int128 d = i128(x.den_) * y.den_;
        return from_i128(n, d);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        __int128 n = i128(x.num_) * y.den_ - i128(y.num_) * x.den_;
        __int128 d = i128(x.den_) * y.den_;
        return from_i128(n, d);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from_i128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using I128 = __int128;
    static I128 i128(std::int64_t v) { return I128(v); }

    static Rational from_i128(I128 n, I128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        I128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: magnitude exceeds int64 after reduction");
        Rational r;
        r.num_ = std::int64_t(n);
        r.den_ = std::int64_t(d);
        return r;
    }

    static I128 gcd128(I128 a, I128 b) {
        while (b != 0) {
            I128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize_from(std::int64_t n, std::int64_t d) {
        *this = from_i128(i128(n), i128(d));
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(r), im(i) {}
    GaussianRational(std::int64_t r) : re(r), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        Rational n2 = y.re * y.re + y.im * y.im;
        if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = x * GaussianRational{y.re, -y.im};
        return {num.re / n2, num.im / n2};
    }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }

    // "0", "1", "-1/2", "i", "-i", "1+i", "1/2-3i", ...
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (!re.is_zero()) s += re.str();
        if (!im.is_zero()) {
            if (!s.empty() && !(im < Rational(0))) s += "+";
            if (im == Rational(1)) s += "i";
            else if (im == Rational(-1)) s += "-i";
            else s += im.str() + "i";
        }
        return s;
    }
};

// Element of Q(zeta_8) written as c0 + c1*w with w = e^{i pi/4}, w^2 = i,
// and c0, c1 in Q(i). This is the exact scalar field for phase arithmetic:
// the eighth roots of unity produced by mixed b/b^{-1} commutators all fold
// into it without any floating point.
struct Zeta8 {
    GaussianRational c0;
    GaussianRational c1;

    Zeta8() = default;
    Zeta8(GaussianRational a) : c0(a), c1() {}
    Zeta8(GaussianRational a, GaussianRational b) : c0(a), c1(b) {}
    Zeta8(std::int64_t n) : c0(Rational(n)), c1() {}

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    friend Zeta8 operator+(const Zeta8& x, const Zeta8& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
    friend Zeta8 operator-(const Zeta8& x, const Zeta8& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
    friend Zeta8 operator*(const Zeta8& x, const Zeta8& y) {
        static const GaussianRational iu{Rational(0), Rational(1)};
        return {x.c0 * y.c0 + iu * (x.c1 * y.c1), x.c0 * y.c1 + x.c1 * y.c0};
    }
    Zeta8 operator-() const { return {-c0, -c1}; }

    friend Zeta8 operator/(const Zeta8& x, const Zeta8& y) {
        if (y.is_zero()) throw std::domain_error("Zeta8: division by zero");
        // (c0 + c1 w)(c0 - c1 w) = c0^2 - i c1^2 in Q(i)
        static const GaussianRational iu{Rational(0), Rational(1)};
        GaussianRational norm = y.c0 * y.c0 - iu * (y.c1 * y.c1);
        Zeta8 num = x * Zeta8{y.c0, -y.c1};
        return {num.c0 / norm, num.c1 / norm};
    }

    friend bool operator==(const Zeta8& x, const Zeta8& y) { return x.c0 == y.c0 && x.c1 == y.c1; }
    friend bool operator!=(const Zeta8& x, const Zeta8& y) { return !(x == y); }

    // zeta_8^m, m arbitrary integer.
    static Zeta8 root_power(long m) {
        m %= 8;
        if (m < 0) m += 8;
        static const GaussianRational table[4] = {
            GaussianRational{Rational(1), Rational(0)},   // i^0
            GaussianRational{Rational(0), Rational(1)},   // i^1
            GaussianRational{Rational(-1), Rational(0)},  // i^2
            GaussianRational{Rational(0), Rational(-1)},  // i^3
        };
        GaussianRational p = table[(m / 2) % 4];
        if (m % 2 == 0) return Zeta8{p};
        return Zeta8{GaussianRational{}, p};
    }
};

}  // namespace qdilog
