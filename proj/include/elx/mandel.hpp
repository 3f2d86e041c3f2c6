#pragma once

#include <array>
#include <cmath>

#include "elx/array.hpp"

namespace elx {

// Mandel component order: (11, 22, 33, 23, 13, 12), off-diagonals carry a
// factor sqrt(2) so that vector/matrix norms equal tensor Frobenius norms.

inline constexpr std::array<int, 6> kMandelI = {0, 1, 2, 1, 0, 0};
inline constexpr std::array<int, 6> kMandelJ = {0, 1, 2, 2, 2, 1};
inline const double kSqrt2 = std::sqrt(2.0);

/// Symmetric rank-2 tensor as a Mandel 6-vector.
struct Vec6 {
    std::array<double, 6> v{};

    double& operator[](int i) { return v[size_t(i)]; }
    double operator[](int i) const { return v[size_t(i)]; }

    double dot(const Vec6& o) const {
        double s = 0;
        for (int i = 0; i < 6; ++i) s += v[size_t(i)] * o[i];
        return s;
    }
    double norm() const { return std::sqrt(dot(*this)); }
    double trace() const { return v[0] + v[1] + v[2]; }

    Vec6 operator+(const Vec6& o) const {
        Vec6 r;
        for (int i = 0; i < 6; ++i) r[i] = v[size_t(i)] + o[i];
        return r;
    }
    Vec6 operator-(const Vec6& o) const {
        Vec6 r;
        for (int i = 0; i < 6; ++i) r[i] = v[size_t(i)] - o[i];
        return r;
    }
    Vec6 operator*(double a) const {
        Vec6 r;
        for (int i = 0; i < 6; ++i) r[i] = v[size_t(i)] * a;
        return r;
    }
};

/// Symmetric rank-4 tensor (e.g. stiffness) as a Mandel 6x6 matrix, row-major.
struct Mat6 {
    std::array<double, 36> m{};

    double& operator()(int i, int j) { return m[size_t(i * 6 + j)]; }
    double operator()(int i, int j) const { return m[size_t(i * 6 + j)]; }

    Vec6 operator*(const Vec6& x) const {
        Vec6 r;
        for (int i = 0; i < 6; ++i) {
            double s = 0;
            for (int j = 0; j < 6; ++j) s += (*this)(i, j) * x[j];
            r[i] = s;
        }
        return r;
    }
    Mat6 operator*(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double s = 0;
                for (int k = 0; k < 6; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Mat6 operator+(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 36; ++i) r.m[size_t(i)] = m[size_t(i)] + o.m[size_t(i)];
        return r;
    }
    Mat6 operator-(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 36; ++i) r.m[size_t(i)] = m[size_t(i)] - o.m[size_t(i)];
        return r;
    }
    Mat6 operator*(double a) const {
        Mat6 r;
        for (int i = 0; i < 36; ++i) r.m[size_t(i)] = m[size_t(i)] * a;
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (double x : m) s += x * x;
        return std::sqrt(s);
    }

    static Mat6 identity() {
        Mat6 r;
        for (int i = 0; i < 6; ++i) r(i, i) = 1.0;
        return r;
    }
};

/// Mandel round trips. 3x3 inputs are row-major double[9]; rank-4 inputs are
/// double[81] indexed t[((i*3+j)*3+k)*3+l]. Non-symmetric input (beyond tol
/// 1e-12 relative) is rejected.
Vec6 mandel_vec(const double* t33);
void mandel_unvec(const Vec6& v, double* t33);
Mat6 mandel_mat(const double* t3333);
void mandel_unmat(const Mat6& m, double* t3333);

/// Two-phase elastic parameters; hard-phase modulus is kappa * E1.
struct PhaseParams {
    double E1 = 120.0;
    double nu1 = 0.3;
    double nu2 = 0.3;
    double kappa = 100.0;

    void validate() const;
    double E2() const { return kappa * E1; }
};

/// Isotropic stiffness in Mandel form from Young's modulus and Poisson ratio.
/// Rejects nu outside (-1, 0.5); nu -> 0.5 is singular.
Mat6 isotropic_stiffness(double E, double nu);

struct LameConstants {
    double lambda, mu;
};
LameConstants lame_constants(double E, double nu);

/// Reference stiffness used for scaling and as the oracle comparison medium:
/// isotropic with E = (E1 + E2) / 2 and nu = nu1. A pure function of the
/// phase parameters, so out-of-distribution contrast only needs kappa.
Mat6 reference_stiffness(const PhaseParams& p);

/// Adimensional scaling derived from the loading magnitude and the reference
/// stiffness Frobenius norm.
struct ScaleSet {
    double strain_scale = 1.0;  // |eps_bar|
    double stiff_scale = 1.0;   // |C0|_F
    double stress_scale() const { return strain_scale * stiff_scale; }
    double energy_scale() const { return strain_scale * strain_scale * stiff_scale; }
};

enum class Quantity { Strain, Stress, Stiffness, Energy };

ScaleSet compute_scales(const Vec6& eps_bar, const Mat6& c_ref);

double scale_factor(const ScaleSet& s, Quantity q);

template <typename T>
void scale_inplace(Array<T>& f, const ScaleSet& s, Quantity q) {
    T inv = T(1.0 / scale_factor(s, q));
    for (auto& x : f.v) x *= inv;
}

template <typename T>
void unscale_inplace(Array<T>& f, const ScaleSet& s, Quantity q) {
    T k = T(scale_factor(s, q));
    for (auto& x : f.v) x *= k;
}

// --- field-level constitutive algebra --------------------------------------
// Strain/stress fields are [6, nvox...]; stiffness fields are [36, nvox...]
// (the per-voxel Mandel 6x6, row-major in the channel index).

/// sigma = C : eps and w = eps : C : eps per voxel.
template <typename T>
void constitutive(const Array<T>& eps, const Array<T>& stiff, Array<T>* sigma,
                  Array<T>* energy) {
    if (eps.shape.empty() || stiff.shape.empty() || eps.shape[0] != 6 ||
        stiff.shape[0] != 36)
        throw std::invalid_argument("constitutive: bad channel counts");
    int64_t n = eps.size() / 6;
    if (stiff.size() / 36 != n)
        throw std::invalid_argument("constitutive: grid size mismatch");
    if (sigma) {
        for (int i = 0; i < 6; ++i) {
            T* out = sigma->data() + i * n;
            for (int64_t x = 0; x < n; ++x) out[x] = T(0);
            for (int j = 0; j < 6; ++j) {
                const T* c = stiff.data() + (i * 6 + j) * n;
                const T* e = eps.data() + j * n;
                for (int64_t x = 0; x < n; ++x) out[x] += c[x] * e[x];
            }
        }
    }
    if (energy) {
        T* out = energy->data();
        for (int64_t x = 0; x < n; ++x) out[x] = T(0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const T* c = stiff.data() + (i * 6 + j) * n;
                const T* ei = eps.data() + i * n;
                const T* ej = eps.data() + j * n;
                for (int64_t x = 0; x < n; ++x) out[x] += ei[x] * c[x] * ej[x];
            }
    }
}

enum class EquivMode { Stress, Strain };  // factor 3/2 vs 2/3

/// Deviator (traceless part) and equivalent scalar of a symmetric-tensor field.
template <typename T>
void equivalent_measures(const Array<T>& t, EquivMode mode, Array<T>* deviator,
                         Array<T>* equivalent) {
    if (t.shape.empty() || t.shape[0] != 6)
        throw std::invalid_argument("equivalent_measures: expected 6 channels");
    int64_t n = t.size() / 6;
    double factor = (mode == EquivMode::Stress) ? 1.5 : (2.0 / 3.0);
    for (int64_t x = 0; x < n; ++x) {
        double p = (double(t[0 * n + x]) + double(t[1 * n + x]) + double(t[2 * n + x])) / 3.0;
        double d[6];
        for (int i = 0; i < 6; ++i) d[i] = double(t[i * n + x]) - (i < 3 ? p : 0.0);
        if (deviator)
            for (int i = 0; i < 6; ++i) (*deviator)[i * n + x] = T(d[i]);
        if (equivalent) {
            double s = 0;
            for (int i = 0; i < 6; ++i) s += d[i] * d[i];
            (*equivalent)[x] = T(std::sqrt(factor * s));
        }
    }
}

/// Flatten a [36, n] Mandel stiffness field to its 21 upper-triangle channels,
/// off-diagonal entries weighted by sqrt(2) so the channel vector preserves
/// the Frobenius norm of the 6x6 matrix.
template <typename T>
Array<T> flatten_stiffness21(const Array<T>& stiff) {
    if (stiff.shape.empty() || stiff.shape[0] != 36)
        throw std::invalid_argument("flatten_stiffness21: expected 36 channels");
    int64_t n = stiff.size() / 36;
    std::vector<int64_t> shape = stiff.shape;
    shape[0] = 21;
    Array<T> out(shape);
    int c = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j, ++c) {
            T w = (i == j) ? T(1) : T(kSqrt2);
            const T* src = stiff.data() + (i * 6 + j) * n;
            T* dst = out.data() + c * n;
            for (int64_t x = 0; x < n; ++x) dst[x] = w * src[x];
        }
    return out;
}

}  // namespace elx
