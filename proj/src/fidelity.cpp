#include "tdswt/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "tdswt/units.hpp"

namespace tdswt {

Eigen::Matrix2cd target_unitary(const TargetAngles& a) {
    const Complex e1 = std::exp(Complex(0.0, a.phi1));
    const Complex e2 = std::exp(Complex(0.0, a.phi2));
    const double c = std::cos(a.theta), s = std::sin(a.theta);
    Eigen::Matrix2cd u;
    u << e1 * c, e2 * s, -std::conj(e2) * s, std::conj(e1) * c;
    return u;
}

std::vector<TargetAngles> sample_angles(std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("sample_angles: count must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        // 53-bit mantissa mapping, identical on every platform
        return units::two_pi * (double(rng() >> 11) * 0x1.0p-53);
    };
    std::vector<TargetAngles> out(static_cast<std::size_t>(count));
    for (auto& a : out) {
        a.phi1 = draw();
        a.phi2 = draw();
        a.theta = draw();
    }
    return out;
}

double gate_fidelity(const Matrix& u, const Matrix& u_ideal) {
    if (u.rows() != 2 || u.cols() != 2 || u_ideal.rows() != 2 || u_ideal.cols() != 2)
        throw std::invalid_argument("gate_fidelity: 2x2 unitaries only");
    const Complex tr = (u.adjoint() * u_ideal).trace();
    return std::norm(tr) / 4.0;
}

std::vector<GateStatsRecord> run_statistics(const Matrix& u1, const Matrix& u2, const Matrix& u3,
                                            const std::vector<TargetAngles>& targets, int threads) {
    const std::size_t n = targets.size();
    std::vector<GateStatsRecord> records(n);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Eigen::Matrix2cd ideal = target_unitary(targets[i]);
            GateStatsRecord& r = records[i];
            r.angles = targets[i];
            r.f1 = gate_fidelity(u1, ideal);
            r.f2 = gate_fidelity(u2, ideal);
            r.f3 = gate_fidelity(u3, ideal);
            r.df12 = r.f1 - r.f2;
            r.df13 = r.f1 - r.f3;
        }
    };
    const int n_threads = std::max(1, threads);
    if (n_threads == 1 || n < 512) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            const std::size_t begin = chunk * static_cast<std::size_t>(t);
            if (begin >= n) break;
            pool.emplace_back(work, begin, std::min(n, begin + chunk));
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

Histogram histogram(const std::vector<double>& values, int n_bins) {
    if (n_bins < 1) throw std::invalid_argument("histogram: n_bins must be >= 1");
    std::vector<double> finite;
    finite.reserve(values.size());
    for (double v : values)
        if (std::isfinite(v)) finite.push_back(v);

    Histogram h;
    h.edges.resize(static_cast<std::size_t>(n_bins) + 1);
    h.density.assign(static_cast<std::size_t>(n_bins), 0.0);
    if (finite.empty()) {
        for (int i = 0; i <= n_bins; ++i) h.edges[static_cast<std::size_t>(i)] = double(i);
        return h;
    }
    auto [lo_it, hi_it] = std::minmax_element(finite.begin(), finite.end());
    double lo = *lo_it, hi = *hi_it;
    if (hi - lo < 1e-12) hi = lo + 1e-12;
    const double width = (hi - lo) / n_bins;
    for (int i = 0; i <= n_bins; ++i) h.edges[static_cast<std::size_t>(i)] = lo + width * i;
    for (double v : finite) {
        int bin = static_cast<int>((v - lo) / width);
        bin = std::clamp(bin, 0, n_bins - 1);
        h.density[static_cast<std::size_t>(bin)] += 1.0;
    }
    const double norm = 1.0 / (static_cast<double>(finite.size()) * width);
    for (double& d : h.density) d *= norm;
    return h;
}

double median(std::vector<double> values) {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    double m = values[mid];
    if (values.size() % 2 == 0) {
        const double lower =
            *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
        m = 0.5 * (m + lower);
    }
    return m;
}

}  // namespace tdswt
