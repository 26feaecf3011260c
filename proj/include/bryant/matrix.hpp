#pragma once

#include <complex>

#include "bryant/complex_box.hpp"

namespace bryant {

// Row-major 2x2 matrix [[a, b], [c, d]] over Cplx or ComplexBox.
template <class T>
struct Mat2 {
    T a, b, c, d;

    static Mat2 identity() { return {T(1.0), T(0.0), T(0.0), T(1.0)}; }
};

using Matrix2c = Mat2<Cplx>;
using MatrixEnclosure = Mat2<ComplexBox>;

template <class T>
Mat2<T> operator+(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

template <class T>
Mat2<T> operator*(const Mat2<T>& x, const Mat2<T>& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

template <class T, class S>
Mat2<T> scale(const Mat2<T>& x, const S& s) {
    return {x.a * s, x.b * s, x.c * s, x.d * s};
}

template <class T>
T det(const Mat2<T>& x) {
    return x.a * x.d - x.b * x.c;
}

inline Matrix2c midpoint(const MatrixEnclosure& m) {
    return {Cplx(m.a.mid()), Cplx(m.b.mid()), Cplx(m.c.mid()), Cplx(m.d.mid())};
}

inline double max_width(const MatrixEnclosure& m) {
    return std::max(std::max(m.a.max_width(), m.b.max_width()),
                    std::max(m.c.max_width(), m.d.max_width()));
}

inline bool contains(const MatrixEnclosure& m, const Matrix2c& x) {
    return m.a.contains(x.a) && m.b.contains(x.b) && m.c.contains(x.c) &&
           m.d.contains(x.d);
}

inline bool intersects(const MatrixEnclosure& x, const MatrixEnclosure& y) {
    return intersects(x.a, y.a) && intersects(x.b, y.b) &&
           intersects(x.c, y.c) && intersects(x.d, y.d);
}

inline MatrixEnclosure inflate(const MatrixEnclosure& m, double delta) {
    return {inflate(m.a, delta), inflate(m.b, delta), inflate(m.c, delta),
            inflate(m.d, delta)};
}

inline Matrix2c conj_transpose(const Matrix2c& m) {
    return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)};
}

inline Matrix2c inverse(const Matrix2c& m) {
    const Cplx dt = det(m);
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

}  // namespace bryant
