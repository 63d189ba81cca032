#ifndef SEGQUANT_STATS_HPP
#define SEGQUANT_STATS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segquant {

enum class EffectLabel { negligible, small, medium, large };

std::string to_string(EffectLabel label);

/// |d| < 0.2 negligible, < 0.5 small, < 0.8 medium, >= 0.8 large.
EffectLabel classify_effect(double d);

struct StatResult {
  double statistic = 0.0;
  double df1 = 0.0;
  std::optional<double> df2; // second df (F tests)
  double p_value = 1.0;
  std::optional<double> effect_size;
  std::optional<EffectLabel> effect_label;
  int n = 0;
  std::vector<std::string> flags;
};

struct AgreementResult {
  double bias = 0.0;     // mean of test - ref
  double sd_diff = 0.0;  // sample SD of the differences
  double loa_low = 0.0;  // bias - 1.96 * sd_diff
  double loa_high = 0.0; // bias + 1.96 * sd_diff
  std::optional<double> bias_pct; // mean of per-subject 100*(test-ref)/ref
  std::optional<double> loa_pct;  // 1.96 * SD of the same (half-width)
  int n = 0;
  std::vector<std::string> flags;
};

struct RegressionFit {
  enum class Method { ols, theil_sen };
  double slope = 0.0;
  double intercept = 0.0;
  Method method = Method::theil_sen;
};

struct OutlierFlags {
  std::vector<double> z_scores;
  std::vector<bool> flagged; // |z| > 3.5
  int count() const;
};

/// Paired t-test on x - y: t = mean(d) / (sd(d)/sqrt(n)), df = n-1, two-sided
/// p. Pooled Cohen's d of x vs y is attached as the effect size. All-equal
/// differences are the zero-variance path: t = +-inf and p = 0 when the common
/// difference is nonzero (flagged), t = 0 and p = 1 when it is zero.
StatResult paired_ttest(std::span<const double> x, std::span<const double> y);

/// (mean(x) - mean(y)) / sqrt((sd(x)^2 + sd(y)^2) / 2).
double cohens_d_pooled(std::span<const double> x, std::span<const double> y);

/// mean(x - y) / sd(x - y); the paired variant.
double cohens_d_paired(std::span<const double> x, std::span<const double> y);

/// One-way within-subject ANOVA on a complete subjects x conditions matrix:
/// F = MS_condition / MS_error, df (k-1, (k-1)(n-1)); no sphericity correction.
StatResult rm_anova(const std::vector<std::vector<double>>& subjects_by_condition);

/// Each p multiplied by m and clipped at 1.
std::vector<double> bonferroni(std::span<const double> p_values, int m);

/// Sample correlation; two-sided p from t = r sqrt((n-2)/(1-r^2)), df = n-2.
StatResult pearson_r(std::span<const double> x, std::span<const double> y);

/// pearson_r of mid-ranks (ties get average ranks), same p approximation.
StatResult spearman_rho(std::span<const double> x, std::span<const double> y);

/// Mid-ranks with average ranks for ties, 1-based.
std::vector<double> midranks(std::span<const double> v);

/// slope = median over pairs (i<j, x_i != x_j) of (y_j-y_i)/(x_j-x_i);
/// intercept = median(y - slope*x). Even-length medians average the two
/// central order statistics.
RegressionFit theil_sen(std::span<const double> x, std::span<const double> y);

/// Modified z-scores 0.6745*(x - median)/MAD, flagging |z| > 3.5. When MAD is
/// zero, falls back to (x - median)/(1.2533 * mean absolute deviation); when
/// that is zero too, nothing is flagged.
OutlierFlags mad_outliers(std::span<const double> x);

/// Bland-Altman agreement of test against ref: bias, sample SD of differences,
/// limits of agreement bias +- 1.96*SD, and per-subject percent differences
/// relative to ref (undefined and flagged when any ref value is 0).
AgreementResult bland_altman(std::span<const double> ref, std::span<const double> test);

} // namespace segquant

#endif
