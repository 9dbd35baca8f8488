#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace histotest::stats {

// Neumaier compensated summation.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double sum(std::span<const double> xs);

double log_choose(std::int64_t n, std::int64_t k);

// P[Bin(n, p) >= j], exact summation.
double binomial_tail_ge(std::int64_t n, double p, std::int64_t j);

// Standard error of a binomial rate estimate.
inline double binomial_se(double rate, std::int64_t trials) {
  return trials > 0 ? std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials)) : 0.0;
}

struct Interval {
  double lo;
  double hi;
};

// Wilson score 95% interval for a binomial proportion.
Interval wilson95(std::int64_t successes, std::int64_t trials);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Chi-square survival function P[X >= x] with df degrees of freedom.
double chi2_sf(double x, double df);

// Goodness-of-fit p-value of observed counts against expected cell
// probabilities (cells with tiny expectation are pooled).
double chi2_gof_pvalue(std::span<const std::int64_t> counts, std::span<const double> probs);

// Two-sample Kolmogorov-Smirnov p-value (asymptotic).
double ks2_pvalue(std::vector<double> a, std::vector<double> b);

}  // namespace histotest::stats
