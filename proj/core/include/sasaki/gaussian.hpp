#pragma once

// Exact Gaussian rationals: elements of Q(i) with GMP rational parts.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace sasaki {

using Rational = mpq_class;

class Gaussian {
public:
    Gaussian() = default;
    Gaussian(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return {re_, -im_}; }
    /// |z|^2 = z * conj(z), always real.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    /// this += a * b without temporaries for the common real case.
    void add_product(const Gaussian& a, const Gaussian& b);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    Gaussian operator-() const { return {-re_, -im_}; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text form: "p/q" when real, otherwise "p/q+r/s*i".
    std::string to_string() const;

    /// Parses "p", "p/q", "p/q*i", "p/q+r/s*i" (r may carry its own sign).
    /// Throws std::invalid_argument on malformed input.
    static Gaussian parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// Parses a plain rational "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace sasaki
