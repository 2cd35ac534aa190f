#pragma once

#include "gstir/graph_stirling.hpp"

namespace gstir {

// Principal branch of Lambert W on the positive axis: w e^w = x.
// Throws std::domain_error for x <= 0.
double lambert_w(double x);

// Standard normal CDF and density.
double normal_cdf(double z);
double normal_pdf(double z);

struct EstimateReport {
    GraphFamily graph;
    long n = 0;
    double w = 0.0;
    double mean_estimate = 0.0;
    double var_estimate = 0.0;
    double mean_exact_float = 0.0;
    double var_exact_float = 0.0;
    // |mean_exact - n/W(n)| * log n
    double mean_abs_error_times_logn = 0.0;
    // |var_exact - n/(W(n)(W(n)+1))| * log n / c^2, with c = 1 for cycles
    double var_abs_error_times_logn_over_c2 = 0.0;
};

EstimateReport estimate_report(const GraphFamily& g);

// (B_{n-1}/B_n - W(n)/n) * n^2 / log n
double bell_ratio_deviation(long n);

// (B_{n+1}/B_{n-1} - (B_n/B_{n-1})^2 - n/(W(n)(W(n)+1))) * log^2 n
double harper_variance_deviation(long n);

struct NormalityReport {
    GraphFamily graph;
    double mean = 0.0;
    double std_dev = 0.0;
    // sup_x |P((X - E X)/sd <= x) - Phi(x)|
    double kolmogorov_distance = 0.0;
    // sup over the support of |sd P(X = k) - phi((k - E X)/sd)|
    double local_limit_sup = 0.0;
    double berry_esseen_product = 0.0;
};

// Throws std::invalid_argument for n < 3 or a degenerate (zero variance)
// distribution such as Cycle(3).
NormalityReport normality_report(const GraphFamily& g);

}  // namespace gstir
