#pragma once

#include "splitoct/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace splitoct {

// Element of Q(i): exact complex scalar with rational real/imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long long r, long long i = 0)
        : re(make_rational(r)), im(make_rational(i)) {}

    static GaussianRational unit_i() { return {0, 1}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational inverse() const {
        Rational n = norm_sq();
        if (n.is_zero()) throw std::domain_error("gaussian: inverse of zero");
        return {re / n, -im / n};
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

// Compact rendering: "0", "1", "-1", "i", "-i", "2i", "1/2+3i", ...
inline std::string gaussian_str(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    std::string out;
    if (!g.re.is_zero()) out += rational_str(g.re);
    if (!g.im.is_zero()) {
        std::string im = rational_str(g.im);
        if (im == "1") im.clear();
        else if (im == "-1") im = "-";
        if (!out.empty() && !im.empty() && im[0] != '-') out += "+";
        if (!out.empty() && im.empty()) out += "+";
        out += im + "i";
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << gaussian_str(g);
}

}  // namespace splitoct
