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

#include "telesim/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace telesim {

SampleStats sample_stats(std::span<const double> xs) {
    SampleStats s;
    s.n = xs.size();
    if (s.n == 0) {
        throw std::invalid_argument("sample_stats: empty sample");
    }
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    s.mean = sum / static_cast<double>(s.n);
    if (s.n >= 2) {
        double ss = 0.0;
        for (double x : xs) {
            double d = x - s.mean;
            ss += d * d;
        }
        s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.sem = s.stddev / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 10000; i++) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; i++) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) {
        throw std::invalid_argument("gamma_p: requires a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x < a + 1.0) {
        return gamma_p_series(a, x);
    }
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) {
        throw std::invalid_argument("gamma_q: requires a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

double chi_square_survival(double chi2, double dof) {
    return gamma_q(dof / 2.0, chi2 / 2.0);
}

double chi_square_statistic(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.empty()) {
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    }
    double chi2 = 0.0;
    for (size_t i = 0; i < observed.size(); i++) {
        if (expected[i] <= 0.0) {
            throw std::invalid_argument("chi_square_statistic: nonpositive expected count");
        }
        double d = observed[i] - expected[i];
        chi2 += d * d / expected[i];
    }
    return chi2;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("linear_fit: need >= 2 points");
    }
    double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < x.size(); i++) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("linear_fit: all x identical");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - (fit.slope * x[i] + fit.intercept);
        fit.residual_ss += r * r;
    }
    return fit;
}

SimplexResult nelder_mead(
    const std::function<double(std::span<const double>)> &f,
    std::span<const double> start,
    std::span<const double> step,
    double rel_tol,
    size_t max_iter) {
    size_t dim = start.size();
    if (dim == 0 || step.size() != dim) {
        throw std::invalid_argument("nelder_mead: bad start/step");
    }

    std::vector<std::vector<double>> pts(dim + 1, std::vector<double>(start.begin(), start.end()));
    for (size_t i = 0; i < dim; i++) {
        pts[i + 1][i] += step[i];
    }
    std::vector<double> vals(dim + 1);
    SimplexResult res;
    auto eval = [&](std::span<const double> p) {
        res.evaluations++;
        double v = f(p);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };
    for (size_t i = 0; i <= dim; i++) {
        vals[i] = eval(pts[i]);
    }

    auto order = [&]() {
        for (size_t i = 1; i <= dim; i++) {
            for (size_t j = i; j > 0 && vals[j] < vals[j - 1]; j--) {
                std::swap(vals[j], vals[j - 1]);
                std::swap(pts[j], pts[j - 1]);
            }
        }
    };
    order();

    for (size_t iter = 0; iter < max_iter; iter++) {
        // Convergence: simplex diameter small relative to parameter scale.
        double diam = 0.0, scale = 0.0;
        for (size_t i = 0; i < dim; i++) {
            double lo = pts[0][i], hi = pts[0][i];
            for (size_t j = 1; j <= dim; j++) {
                lo = std::min(lo, pts[j][i]);
                hi = std::max(hi, pts[j][i]);
            }
            diam = std::max(diam, hi - lo);
            scale = std::max(scale, std::fabs(pts[0][i]));
        }
        if (diam <= rel_tol * (scale + 1e-12) + 1e-12) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (size_t j = 0; j < dim; j++) {
            for (size_t i = 0; i < dim; i++) {
                centroid[i] += pts[j][i] / static_cast<double>(dim);
            }
        }
        auto blend = [&](double t) {
            std::vector<double> p(dim);
            for (size_t i = 0; i < dim; i++) {
                p[i] = centroid[i] + t * (pts[dim][i] - centroid[i]);
            }
            return p;
        };

        auto refl = blend(-1.0);
        double fr = eval(refl);
        if (fr < vals[0]) {
            auto expd = blend(-2.0);
            double fe = eval(expd);
            if (fe < fr) {
                pts[dim] = std::move(expd);
                vals[dim] = fe;
            } else {
                pts[dim] = std::move(refl);
                vals[dim] = fr;
            }
        } else if (fr < vals[dim - 1]) {
            pts[dim] = std::move(refl);
            vals[dim] = fr;
        } else {
            auto contr = blend(fr < vals[dim] ? -0.5 : 0.5);
            double fc = eval(contr);
            if (fc < std::min(fr, vals[dim])) {
                pts[dim] = std::move(contr);
                vals[dim] = fc;
            } else {
                // Shrink toward the best vertex.
                for (size_t j = 1; j <= dim; j++) {
                    for (size_t i = 0; i < dim; i++) {
                        pts[j][i] = pts[0][i] + 0.5 * (pts[j][i] - pts[0][i]);
                    }
                    vals[j] = eval(pts[j]);
                }
            }
        }
        order();
    }

    res.x = pts[0];
    res.value = vals[0];
    return res;
}

double golden_section_minimize(const std::function<double(double)> &f, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw std::invalid_argument("golden_section_minimize: bad interval");
    }
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace telesim
