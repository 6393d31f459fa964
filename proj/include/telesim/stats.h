// Copyright 2026 The Telesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TELESIM_STATS_H
#define TELESIM_STATS_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace telesim {

struct SampleStats {
    double mean = 0.0;
    double stddev = 0.0;  // n-1 convention; 0 for n < 2
    double sem = 0.0;     // stddev / sqrt(n); 0 for n < 2
    size_t n = 0;
};

SampleStats sample_stats(std::span<const double> xs);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution (p-value of `chi2`
/// with `dof` degrees of freedom).
double chi_square_survival(double chi2, double dof);

/// Pearson chi-square statistic of observed counts against expected counts.
double chi_square_statistic(std::span<const double> observed, std::span<const double> expected);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_ss = 0.0;
};

/// Ordinary least squares y = slope*x + intercept. Requires >= 2 points.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    size_t evaluations = 0;
};

/// Derivative-free Nelder-Mead simplex minimizer.
///
/// Converges when the simplex diameter falls below `rel_tol` relative to the
/// parameter scale (plus a small absolute floor). The objective may return
/// +inf to reject out-of-bounds points.
SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)> &f,
    std::span<const double> start,
    std::span<const double> step,
    double rel_tol = 1e-4,
    size_t max_iter = 4000);

/// Golden-section minimization of a 1-d unimodal function on [lo, hi].
double golden_section_minimize(const std::function<double(double)> &f, double lo, double hi, double tol);

}  // namespace telesim

#endif
