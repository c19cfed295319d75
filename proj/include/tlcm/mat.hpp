// Copyright (c) 2026 TLCM Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tlcm {

// Dense row-major matrix of doubles. All heavy linear algebra in the
// project goes through the free functions below so the threading and
// summation order stay in one place.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}
    Mat(int r, int c, std::vector<double> data);

    double& operator()(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

    std::span<double> row(int r) { return {v.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
    std::span<const double> row(int r) const {
        return {v.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }

    std::size_t size() const { return v.size(); }
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
    bool all_finite() const;
};

// out = a * b^T where a is (n x k) and b is (m x k); result (n x m).
// Each output element is accumulated by exactly one thread, so results do
// not depend on the worker count.
Mat matmul_nt(const Mat& a, const Mat& b);

// out = a * b where a is (n x k) and b is (k x m); result (n x m).
Mat matmul_nn(const Mat& a, const Mat& b);

// dst (m x k) += g^T * a computed as sum over rows: dst[o,:] += g[b,o] * a[b,:].
// g is (n x m), a is (n x k). Row accumulation order is fixed.
void accumulate_outer(const Mat& g, const Mat& a, Mat& dst);

// Column sums of m, result has m.cols entries, accumulated in row order.
std::vector<double> col_sums(const Mat& m);

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, double s);
Mat& operator+=(Mat& a, const Mat& b);
Mat& operator*=(Mat& a, double s);

// mean of squared entries; the distance used throughout the losses.
double mean_sq(const Mat& m);

// Frobenius inner product <a, b> / divisor.
double dot_scaled(const Mat& a, const Mat& b, double divisor);

double max_abs_diff(const Mat& a, const Mat& b);

}  // namespace tlcm
