#pragma once

#include <complex>

#include "bryant/interval.hpp"

namespace bryant {

// Plain complex value with textbook componentwise formulas for * and /.
// std::complex division uses Smith scaling, which is more robust near
// overflow but does not correspond operation-for-operation with the box
// arithmetic below.  Floating-mode results must land inside interval-mode
// enclosures, so the floating path uses this type and the exact same
// expression structure as ComplexBox.
struct Cplx {
    double re = 0.0, im = 0.0;

    Cplx() = default;
    Cplx(double r, double i) : re(r), im(i) {}
    explicit Cplx(double r) : re(r), im(0.0) {}
    explicit Cplx(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> std() const { return {re, im}; }
};

inline Cplx operator+(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator-(Cplx a) { return {-a.re, -a.im}; }
inline Cplx operator*(Cplx a, Cplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(Cplx a, double s) { return {a.re * s, a.im * s}; }
inline Cplx conj(Cplx a) { return {a.re, -a.im}; }
inline Cplx operator/(Cplx a, Cplx b) {
    const double n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline double abs2(Cplx a) { return a.re * a.re + a.im * a.im; }

// Axis-aligned rectangle in the complex plane.
class ComplexBox {
  public:
    ComplexBox() = default;
    ComplexBox(RealInterval re, RealInterval im) : re_(re), im_(im) {}
    explicit ComplexBox(std::complex<double> z)
        : re_(z.real()), im_(z.imag()) {}
    explicit ComplexBox(Cplx z) : re_(z.re), im_(z.im) {}
    explicit ComplexBox(double x) : re_(x), im_(0.0) {}

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }

    std::complex<double> mid() const { return {re_.mid(), im_.mid()}; }
    double max_width() const { return std::max(re_.width(), im_.width()); }
    bool contains(std::complex<double> z) const {
        return re_.contains(z.real()) && im_.contains(z.imag());
    }
    bool contains(Cplx z) const { return re_.contains(z.re) && im_.contains(z.im); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  private:
    RealInterval re_, im_;
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}
inline ComplexBox operator-(const ComplexBox& a) { return {-a.re(), -a.im()}; }
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
inline ComplexBox operator*(const ComplexBox& a, const RealInterval& s) {
    return {a.re() * s, a.im() * s};
}
inline ComplexBox operator*(const ComplexBox& a, double s) {
    return a * RealInterval(s);
}
inline ComplexBox conj(const ComplexBox& a) { return {a.re(), -a.im()}; }

inline RealInterval norm2(const ComplexBox& a) {
    return square(a.re()) + square(a.im());
}

inline ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
    const RealInterval n = norm2(b);
    if (n.contains_zero())
        throw DivisionByZeroInterval("complex box division by box containing 0");
    return {(a.re() * b.re() + a.im() * b.im()) / n,
            (a.im() * b.re() - a.re() * b.im()) / n};
}

// Modulus range.  The lower endpoint is the distance from the origin to the
// rectangle (0 if inside), because square() clamps straddling components.
inline RealInterval abs(const ComplexBox& a) {
    return sqrt(clamp_nonnegative(norm2(a)));
}

inline ComplexBox inflate(const ComplexBox& a, double delta) {
    return {inflate(a.re(), delta), inflate(a.im(), delta)};
}

inline ComplexBox hull(const ComplexBox& a, const ComplexBox& b) {
    return {hull(a.re(), b.re()), hull(a.im(), b.im())};
}

inline bool intersects(const ComplexBox& a, const ComplexBox& b) {
    return intersects(a.re(), b.re()) && intersects(a.im(), b.im());
}

// Re(conj(x) * y) and Im(conj(x) * y) without forming the full product box;
// these are the building blocks of the period quotients.
inline RealInterval re_conj_prod(const ComplexBox& x, const ComplexBox& y) {
    return x.re() * y.re() + x.im() * y.im();
}
inline RealInterval im_conj_prod(const ComplexBox& x, const ComplexBox& y) {
    return x.re() * y.im() - x.im() * y.re();
}
inline double re_conj_prod(Cplx x, Cplx y) { return x.re * y.re + x.im * y.im; }
inline double im_conj_prod(Cplx x, Cplx y) { return x.re * y.im - x.im * y.re; }

// Enclosure of one square root of every point of s, on the branch selected by
// `hint`.  s must exclude 0; the two root components +/-T are then disjoint,
// and the one whose midpoint is nearest the hint is returned.  Requires the
// hint to be at least 10x nearer one component than the other.
ComplexBox sqrt_branch(const ComplexBox& s, std::complex<double> hint);

// Scalar counterpart with the identical u/v decomposition, so its result is
// contained in sqrt_branch of any box around s.
Cplx sqrt_nearest(Cplx s, Cplx hint);

}  // namespace bryant
