#include "gstir/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gstir {

double lambert_w(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("lambert_w: argument must be positive");
    }
    double w;
    if (x >= std::numbers::e) {
        const double l = std::log(x);
        w = std::max(l - std::log(l), 0.5);
    } else if (x > 1e-3) {
        // W is increasing and W(e) = 1, so the root lies in [0, 1].
        double lo = 0.0;
        double hi = 1.0;
        for (int i = 0; i < 30; ++i) {
            const double mid = 0.5 * (lo + hi);
            (mid * std::exp(mid) < x ? lo : hi) = mid;
        }
        w = 0.5 * (lo + hi);
    } else {
        w = x;
    }
    for (int iter = 0; iter < 100; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) {
            break;
        }
    }
    return w;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

EstimateReport estimate_report(const GraphFamily& g) {
    if (g.vertices() < 3) {
        throw std::invalid_argument("estimate_report requires n >= 3");
    }
    const MomentReport m = moments(g);
    EstimateReport r{g};
    r.n = g.vertices();
    r.w = lambert_w(static_cast<double>(r.n));
    r.mean_estimate = m.mean_estimate;
    r.var_estimate = m.variance_estimate;
    r.mean_exact_float = m.mean_float;
    r.var_exact_float = m.variance_float;
    const double logn = std::log(static_cast<double>(r.n));
    const double c = static_cast<double>(g.components());
    r.mean_abs_error_times_logn = std::abs(m.mean_float - m.mean_estimate) * logn;
    r.var_abs_error_times_logn_over_c2 = std::abs(m.variance_float - m.variance_estimate) * logn / (c * c);
    return r;
}

double bell_ratio_deviation(long n) {
    if (n < 2) {
        throw std::invalid_argument("bell_ratio_deviation requires n >= 2");
    }
    const auto b = bell_prefix(static_cast<std::size_t>(n));
    const double dn = static_cast<double>(n);
    const double ratio = ratio_to_double(b[static_cast<std::size_t>(n) - 1], b[static_cast<std::size_t>(n)]);
    return (ratio - lambert_w(dn) / dn) * dn * dn / std::log(dn);
}

double harper_variance_deviation(long n) {
    if (n < 3) {
        throw std::invalid_argument("harper_variance_deviation requires n >= 3");
    }
    const auto b = bell_prefix(static_cast<std::size_t>(n) + 1);
    const auto idx = static_cast<std::size_t>(n);
    const Integer num = b[idx + 1] * b[idx - 1] - b[idx] * b[idx];
    const Integer den = b[idx - 1] * b[idx - 1];
    const double dn = static_cast<double>(n);
    const double w = lambert_w(dn);
    const double logn = std::log(dn);
    return (ratio_to_double(num, den) - dn / (w * (w + 1.0))) * logn * logn;
}

NormalityReport normality_report(const GraphFamily& g) {
    if (g.vertices() < 3) {
        throw std::invalid_argument("normality_report requires n >= 3");
    }
    const auto v = stirling_vector(g);
    const auto& a = v.counts;
    Integer s0 = 0;
    Integer s1 = 0;
    Integer s2 = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const unsigned long kk = k;
        s0 += a[k];
        s1 += a[k] * kk;
        s2 += a[k] * (kk * kk);
    }
    mpq_class mean(s1, s0);
    mean.canonicalize();
    mpq_class second(s2, s0);
    second.canonicalize();
    const mpq_class var = second - mean * mean;
    if (var <= 0) {
        throw std::invalid_argument("normality_report: " + g.str() + " has a degenerate distribution");
    }

    NormalityReport r{g};
    r.mean = ratio_to_double(mean);
    r.std_dev = std::sqrt(ratio_to_double(var));

    Integer prefix = 0;
    double cdf_left = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        prefix += a[k];
        const double cdf_right = ratio_to_double(prefix, s0);
        const double z = (static_cast<double>(k) - r.mean) / r.std_dev;
        const double phi = normal_cdf(z);
        r.kolmogorov_distance =
            std::max({r.kolmogorov_distance, std::abs(cdf_right - phi), std::abs(cdf_left - phi)});
        if (a[k] != 0) {
            const double pk = ratio_to_double(a[k], s0);
            r.local_limit_sup = std::max(r.local_limit_sup, std::abs(r.std_dev * pk - normal_pdf(z)));
        }
        cdf_left = cdf_right;
    }
    r.berry_esseen_product = r.kolmogorov_distance * r.std_dev;
    return r;
}

}  // namespace gstir
