// linalg.hpp
// Fixed-size complex linear algebra for the 4-state walk: column vectors in
// C^4 and dense row-major 4x4 matrices. All operations are pure.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace memwalk {

using Complex = std::complex<double>;

inline constexpr std::size_t kDim = 4;

class C4Vector {
public:
    constexpr C4Vector() = default;
    constexpr C4Vector(Complex c0, Complex c1, Complex c2, Complex c3) : c_{c0, c1, c2, c3} {}

    static constexpr C4Vector basis(std::size_t i) {
        C4Vector v;
        v.c_[i] = 1.0;
        return v;
    }

    constexpr Complex& operator[](std::size_t i) { return c_[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return c_[i]; }

    // Sum of squared moduli.
    double norm2() const {
        return std::norm(c_[0]) + std::norm(c_[1]) + std::norm(c_[2]) + std::norm(c_[3]);
    }
    double norm() const;

    C4Vector& operator+=(const C4Vector& o) {
        for (std::size_t i = 0; i < kDim; ++i) c_[i] += o.c_[i];
        return *this;
    }
    C4Vector& operator-=(const C4Vector& o) {
        for (std::size_t i = 0; i < kDim; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    C4Vector& operator*=(Complex s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend C4Vector operator+(C4Vector a, const C4Vector& b) { return a += b; }
    friend C4Vector operator-(C4Vector a, const C4Vector& b) { return a -= b; }
    friend C4Vector operator*(Complex s, C4Vector v) { return v *= s; }
    friend C4Vector operator*(C4Vector v, Complex s) { return v *= s; }
    friend bool operator==(const C4Vector&, const C4Vector&) = default;

    const std::array<Complex, kDim>& components() const { return c_; }

private:
    std::array<Complex, kDim> c_{};
};

// <u|v>, conjugate-linear in the first argument.
Complex inner(const C4Vector& u, const C4Vector& v);

// Largest componentwise modulus of u - v.
double max_abs_diff(const C4Vector& u, const C4Vector& v);

class C4Matrix {
public:
    constexpr C4Matrix() = default;

    static constexpr C4Matrix identity() {
        C4Matrix m;
        for (std::size_t i = 0; i < kDim; ++i) m(i, i) = 1.0;
        return m;
    }
    static constexpr C4Matrix zero() { return C4Matrix{}; }
    static constexpr C4Matrix diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
        C4Matrix m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        m(3, 3) = d3;
        return m;
    }
    static constexpr C4Matrix from_rows(const std::array<std::array<Complex, kDim>, kDim>& rows) {
        C4Matrix m;
        for (std::size_t r = 0; r < kDim; ++r)
            for (std::size_t c = 0; c < kDim; ++c) m(r, c) = rows[r][c];
        return m;
    }

    constexpr Complex& operator()(std::size_t r, std::size_t c) { return e_[r * kDim + c]; }
    constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return e_[r * kDim + c]; }

    C4Matrix& operator+=(const C4Matrix& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    C4Matrix& operator-=(const C4Matrix& o) {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    C4Matrix& operator*=(Complex s) {
        for (auto& x : e_) x *= s;
        return *this;
    }

    friend C4Matrix operator+(C4Matrix a, const C4Matrix& b) { return a += b; }
    friend C4Matrix operator-(C4Matrix a, const C4Matrix& b) { return a -= b; }
    friend C4Matrix operator*(Complex s, C4Matrix m) { return m *= s; }
    friend bool operator==(const C4Matrix&, const C4Matrix&) = default;

private:
    std::array<Complex, kDim * kDim> e_{};
};

C4Vector mat_vec(const C4Matrix& m, const C4Vector& v);
C4Matrix mat_mul(const C4Matrix& a, const C4Matrix& b);
C4Matrix adjoint(const C4Matrix& m);

inline C4Vector operator*(const C4Matrix& m, const C4Vector& v) { return mat_vec(m, v); }
inline C4Matrix operator*(const C4Matrix& a, const C4Matrix& b) { return mat_mul(a, b); }

// Largest entry modulus of a - b.
double max_abs_diff(const C4Matrix& a, const C4Matrix& b);

// True iff max |(m m^dagger - I)_{rc}| <= tol. Throws InvalidInput for tol <= 0.
bool is_unitary(const C4Matrix& m, double tol);

// Cofactor expansion along the first row.
Complex determinant(const C4Matrix& m);

}  // namespace memwalk
