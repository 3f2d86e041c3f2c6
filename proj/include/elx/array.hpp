#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace elx {

/// Cubic-or-rectangular periodic voxel grid dimensions.
struct Grid3 {
    int nx = 0, ny = 0, nz = 0;

    int64_t nvox() const { return int64_t(nx) * ny * nz; }
    int nz_r() const { return nz / 2 + 1; }  // rFFT size along z
    int64_t nfreq() const { return int64_t(nx) * ny * nz_r(); }
    bool operator==(const Grid3&) const = default;

    static Grid3 cube(int n) { return {n, n, n}; }
};

/// Dense row-major (C-order) n-d array. Fields use shape [channels, nx, ny, nz].
template <typename T>
struct Array {
    std::vector<int64_t> shape;
    std::vector<T> v;

    Array() = default;
    explicit Array(std::vector<int64_t> s) : shape(std::move(s)) {
        v.assign(count(shape), T{});
    }
    Array(std::vector<int64_t> s, T fill) : shape(std::move(s)) {
        v.assign(count(shape), fill);
    }

    static int64_t count(const std::vector<int64_t>& s) {
        int64_t n = 1;
        for (auto d : s) {
            if (d <= 0) throw std::invalid_argument("Array: nonpositive dim");
            n *= d;
        }
        return n;
    }

    int64_t size() const { return int64_t(v.size()); }
    T* data() { return v.data(); }
    const T* data() const { return v.data(); }
    T& operator[](int64_t i) { return v[size_t(i)]; }
    const T& operator[](int64_t i) const { return v[size_t(i)]; }

    bool same_shape(const Array& o) const { return shape == o.shape; }

    void fill(T x) { std::fill(v.begin(), v.end(), x); }
};

template <typename T>
Array<T> field_array(int channels, const Grid3& g) {
    return Array<T>({channels, g.nx, g.ny, g.nz});
}

/// Channel count of a [c, nx, ny, nz] field.
template <typename T>
int field_channels(const Array<T>& f) {
    if (f.shape.size() != 4) throw std::invalid_argument("expected rank-4 field");
    return int(f.shape[0]);
}

template <typename T>
Grid3 field_grid(const Array<T>& f) {
    if (f.shape.size() != 4) throw std::invalid_argument("expected rank-4 field");
    return Grid3{int(f.shape[1]), int(f.shape[2]), int(f.shape[3])};
}

/// Sum in double regardless of T; sequential and therefore deterministic.
template <typename T>
double dsum(const T* p, int64_t n) {
    double s = 0.0;
    for (int64_t i = 0; i < n; ++i) s += double(p[i]);
    return s;
}

template <typename T>
double ddot(const T* a, const T* b, int64_t n) {
    double s = 0.0;
    for (int64_t i = 0; i < n; ++i) s += double(a[i]) * double(b[i]);
    return s;
}

template <typename T>
double dnorm2(const T* p, int64_t n) {
    double s = 0.0;
    for (int64_t i = 0; i < n; ++i) s += double(p[i]) * double(p[i]);
    return std::sqrt(s);
}

}  // namespace elx
