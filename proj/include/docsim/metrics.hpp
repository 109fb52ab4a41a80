#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace docsim {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Sample Pearson correlation. Throws std::invalid_argument on length mismatch or
/// fewer than two points, UndefinedResultError when either series is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> xs);

/// Pearson correlation of average ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// Fraction of equal entries. Throws std::invalid_argument on mismatch or empty input.
double accuracy(std::span<const int> predicted, std::span<const int> gold);

struct ThresholdFit {
  double threshold = 0.0;
  double train_accuracy = 0.0;
};

/// Picks the decision threshold (predict 1 iff score >= threshold) maximizing
/// training accuracy. Candidates are 0, 1, every distinct score and every
/// midpoint between adjacent distinct scores; the smallest maximizer wins.
/// Throws std::invalid_argument unless both classes are present.
ThresholdFit fit_threshold(std::span<const double> scores, std::span<const int> labels);

inline double calibrate_threshold(std::span<const double> scores, std::span<const int> labels) {
  return fit_threshold(scores, labels).threshold;
}

}  // namespace docsim
