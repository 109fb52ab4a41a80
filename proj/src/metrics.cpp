#include "docsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "docsim/error.hpp"

namespace docsim {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("pearson: need at least two points");
  const double n = static_cast<double>(xs.size());

  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;

  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  if (!(sxx.value() > 0.0) || !(syy.value() > 0.0)) {
    throw UndefinedResultError("correlation undefined for constant input");
  }
  return std::clamp(sxy.value() / std::sqrt(sxx.value() * syy.value()), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && xs[order[j]] == xs[order[i]]) ++j;
    // Positions i..j-1 hold rank values i+1..j.
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman: length mismatch");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

double accuracy(std::span<const int> predicted, std::span<const int> gold) {
  if (predicted.size() != gold.size()) throw std::invalid_argument("accuracy: length mismatch");
  if (predicted.empty()) throw std::invalid_argument("accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) hits += predicted[i] == gold[i];
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

ThresholdFit fit_threshold(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("fit_threshold: length mismatch");
  const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
  if (positives == 0 || positives == labels.size()) {
    throw std::invalid_argument("fit_threshold: training data must contain both classes");
  }

  // Sorted scores with cumulative positive counts allow O(log n) accuracy per candidate.
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<double> sorted(scores.size());
  std::vector<std::size_t> pos_below(scores.size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = scores[order[i]];
    pos_below[i + 1] = pos_below[i] + (labels[order[i]] == 1);
  }

  std::vector<double> candidates{0.0, 1.0};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    candidates.push_back(sorted[i]);
    if (i > 0) candidates.push_back(sorted[i - 1] + (sorted[i] - sorted[i - 1]) / 2.0);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const std::size_t n = scores.size();
  ThresholdFit best{candidates.front(), -1.0};
  std::size_t best_correct = 0;
  bool have = false;
  for (double t : candidates) {
    // Items below t are predicted 0.
    const auto below = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
    const std::size_t true_neg = below - pos_below[below];
    const std::size_t true_pos = positives - pos_below[below];
    const std::size_t correct = true_neg + true_pos;
    if (!have || correct > best_correct) {
      have = true;
      best_correct = correct;
      best.threshold = t;
    }
  }
  best.train_accuracy = static_cast<double>(best_correct) / static_cast<double>(n);
  return best;
}

}  // namespace docsim
