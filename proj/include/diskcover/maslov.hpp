#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace diskcover {

struct DegenerateFrame : std::domain_error {
    DegenerateFrame() : std::domain_error("frame sample has zero determinant") {}
};

struct UndersampledLoop : std::domain_error {
    explicit UndersampledLoop(const std::string& what) : std::domain_error(what) {}
};

/// A sampled loop of totally real n-frames along the boundary circle.
/// Each sample is an n x n complex matrix, row-major, whose columns span
/// a totally real n-plane.
struct FrameLoop {
    int n = 0;
    std::vector<std::vector<std::complex<double>>> samples; // each of size n*n

    bool well_formed() const {
        if (n < 1 || samples.empty())
            return false;
        for (const auto& s : samples)
            if (static_cast<int>(s.size()) != n * n)
                return false;
        return true;
    }
};

/// Block-diagonal concatenation of two loops with equal sample counts.
inline FrameLoop direct_sum(const FrameLoop& a, const FrameLoop& b) {
    if (a.samples.size() != b.samples.size())
        throw std::invalid_argument("direct_sum: sample counts differ");
    FrameLoop c;
    c.n = a.n + b.n;
    c.samples.resize(a.samples.size());
    for (std::size_t k = 0; k < a.samples.size(); ++k) {
        auto& m = c.samples[k];
        m.assign(static_cast<std::size_t>(c.n) * c.n, {0.0, 0.0});
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < a.n; ++j)
                m[i * c.n + j] = a.samples[k][i * a.n + j];
        for (int i = 0; i < b.n; ++i)
            for (int j = 0; j < b.n; ++j)
                m[(a.n + i) * c.n + (a.n + j)] = b.samples[k][i * b.n + j];
    }
    return c;
}

namespace detail {

inline std::complex<long double> frame_determinant(const std::vector<std::complex<double>>& m,
                                                   int n) {
    std::vector<std::complex<long double>> a(m.begin(), m.end());
    std::complex<long double> det = 1.0L;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        long double best = 0.0L;
        for (int row = col; row < n; ++row) {
            long double mag = std::abs(a[row * n + col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (pivot < 0 || best == 0.0L)
            return 0.0L;
        if (pivot != col) {
            for (int j = col; j < n; ++j)
                std::swap(a[pivot * n + j], a[col * n + j]);
            det = -det;
        }
        det *= a[col * n + col];
        for (int row = col + 1; row < n; ++row) {
            auto f = a[row * n + col] / a[col * n + col];
            for (int j = col; j < n; ++j)
                a[row * n + j] -= f * a[col * n + j];
        }
    }
    return det;
}

} // namespace detail

/// Winding number of det^2 of the frame around 0, accumulated over the
/// cyclic sample sequence. Requires every sample to be nondegenerate and
/// consecutive det^2 phase jumps below pi; the accumulated winding must
/// land within a quarter turn of an integer.
inline int maslov_index(const FrameLoop& loop) {
    if (!loop.well_formed())
        throw std::invalid_argument("maslov_index: malformed frame loop");

    const long double pi = 3.141592653589793238462643383279502884L;
    std::size_t count = loop.samples.size();
    std::vector<std::complex<long double>> det_sq(count);
    for (std::size_t k = 0; k < count; ++k) {
        auto d = detail::frame_determinant(loop.samples[k], loop.n);
        if (std::abs(d) < 1e-12L)
            throw DegenerateFrame();
        det_sq[k] = d * d;
    }

    long double total = 0.0L;
    for (std::size_t k = 0; k < count; ++k) {
        auto ratio = det_sq[(k + 1) % count] / det_sq[k];
        long double jump = std::arg(ratio);
        if (std::abs(jump) >= pi - 1e-9L)
            throw UndersampledLoop("consecutive det^2 phase jump >= pi");
        total += jump;
    }

    long double turns = total / (2.0L * pi);
    long double rounded = std::llround(static_cast<double>(turns));
    if (std::abs(turns - rounded) >= 0.25L)
        throw UndersampledLoop("accumulated winding not within 1/4 turn of an integer");
    return static_cast<int>(rounded);
}

} // namespace diskcover
