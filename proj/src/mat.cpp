// Copyright (c) 2026 TLCM Authors
// SPDX-License-Identifier: Apache-2.0

#include "tlcm/mat.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tlcm {

Mat::Mat(int r, int c, std::vector<double> data) : rows(r), cols(c), v(std::move(data)) {
    if (v.size() != static_cast<std::size_t>(r) * c) {
        throw std::invalid_argument("Mat: data size does not match shape");
    }
}

bool Mat::all_finite() const {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("matmul_nt: inner dims differ");
    Mat out(a.rows, b.rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i) {
        const double* ai = a.v.data() + static_cast<std::size_t>(i) * a.cols;
        double* oi = out.v.data() + static_cast<std::size_t>(i) * out.cols;
        for (int j = 0; j < b.rows; ++j) {
            const double* bj = b.v.data() + static_cast<std::size_t>(j) * b.cols;
            double acc = 0.0;
            for (int k = 0; k < a.cols; ++k) acc += ai[k] * bj[k];
            oi[j] = acc;
        }
    }
    return out;
}

Mat matmul_nn(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul_nn: inner dims differ");
    Mat out(a.rows, b.cols);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i) {
        const double* ai = a.v.data() + static_cast<std::size_t>(i) * a.cols;
        double* oi = out.v.data() + static_cast<std::size_t>(i) * out.cols;
        for (int k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.v.data() + static_cast<std::size_t>(k) * b.cols;
            for (int j = 0; j < b.cols; ++j) oi[j] += aik * bk[j];
        }
    }
    return out;
}

void accumulate_outer(const Mat& g, const Mat& a, Mat& dst) {
    if (g.rows != a.rows || dst.rows != g.cols || dst.cols != a.cols) {
        throw std::invalid_argument("accumulate_outer: shape mismatch");
    }
#pragma omp parallel for schedule(static)
    for (int o = 0; o < g.cols; ++o) {
        double* d = dst.v.data() + static_cast<std::size_t>(o) * dst.cols;
        for (int b = 0; b < g.rows; ++b) {
            const double gbo = g(b, o);
            if (gbo == 0.0) continue;
            const double* ab = a.v.data() + static_cast<std::size_t>(b) * a.cols;
            for (int k = 0; k < a.cols; ++k) d[k] += gbo * ab[k];
        }
    }
}

std::vector<double> col_sums(const Mat& m) {
    std::vector<double> out(static_cast<std::size_t>(m.cols), 0.0);
    for (int r = 0; r < m.rows; ++r) {
        const double* mr = m.v.data() + static_cast<std::size_t>(r) * m.cols;
        for (int c = 0; c < m.cols; ++c) out[c] += mr[c];
    }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("Mat+: shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("Mat-: shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    return out;
}

Mat operator*(const Mat& a, double s) {
    Mat out = a;
    for (double& x : out.v) x *= s;
    return out;
}

Mat& operator+=(Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("Mat+=: shape mismatch");
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
}

Mat& operator*=(Mat& a, double s) {
    for (double& x : a.v) x *= s;
    return a;
}

double mean_sq(const Mat& m) {
    double acc = 0.0;
    for (double x : m.v) acc += x * x;
    return m.v.empty() ? 0.0 : acc / static_cast<double>(m.v.size());
}

double dot_scaled(const Mat& a, const Mat& b, double divisor) {
    if (!a.same_shape(b)) throw std::invalid_argument("dot_scaled: shape mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) acc += a.v[i] * b.v[i];
    return acc / divisor;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::fabs(a.v[i] - b.v[i]));
    return m;
}

}  // namespace tlcm
