#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

namespace casinet {

using complexd = std::complex<double>;

// 2x2 complex matrix, row major. Small enough that the full calculus used by
// the scattering/transfer algebra fits in a handful of inline operations.
struct Mat2 {
    complexd m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }
    static Mat2 diag(complexd a, complexd b) { return {a, 0.0, 0.0, b}; }

    Mat2 operator+(const Mat2& o) const { return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11}; }
    Mat2 operator-(const Mat2& o) const { return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11}; }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Mat2 operator*(complexd s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    complexd det() const { return m00 * m11 - m01 * m10; }
    complexd trace() const { return m00 + m11; }

    Mat2 inverse() const {
        const complexd d = det();
        return {m11 / d, -m01 / d, -m10 / d, m00 / d};
    }

    double max_abs() const {
        return std::max(std::max(std::abs(m00), std::abs(m01)),
                        std::max(std::abs(m10), std::abs(m11)));
    }
};

inline Mat2 operator*(complexd s, const Mat2& m) { return m * s; }

// Distance from Hermiticity, max over entries of |M - M†|.
inline double hermiticity_defect(const Mat2& m) { return (m - m.adjoint()).max_abs(); }

// Eigenvalues of a Hermitian 2x2 matrix, descending. The tiny anti-Hermitian
// rounding residue is discarded.
inline std::pair<double, double> hermitian_eigenvalues(const Mat2& m) {
    const double a = m.m00.real();
    const double d = m.m11.real();
    const double mean = 0.5 * (a + d);
    const double off = std::abs(0.5 * (m.m01 + std::conj(m.m10)));
    const double r = std::hypot(0.5 * (a - d), off);
    return {mean + r, mean - r};
}

// Direction projectors and their difference, used by the transfer-picture
// algebra.
inline const Mat2 kPiPlus{1.0, 0.0, 0.0, 0.0};
inline const Mat2 kPiMinus{0.0, 0.0, 0.0, 1.0};
inline const Mat2 kPhi{1.0, 0.0, 0.0, -1.0};  // pi_+ - pi_-

}  // namespace casinet
