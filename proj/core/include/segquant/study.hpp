#ifndef SEGQUANT_STUDY_HPP
#define SEGQUANT_STUDY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "segquant/label_dictionary.hpp"
#include "segquant/overlap_metrics.hpp"
#include "segquant/stats.hpp"

namespace segquant {

/// Condition name used for the expert/reference segmentation in all tables.
inline const char* reference_method_name() { return "reference"; }

enum class Sex { f, m, unknown };
std::string to_string(Sex s);
Sex sex_from_string(const std::string& s);

struct SubjectRecord {
  std::string subject_id;
  std::string session_id;
  double age_months = 0.0;
  Sex sex = Sex::unknown;
  std::string reference_path;
  std::map<std::string, std::string> candidate_paths; // method -> path
};

struct StudyOptions {
  Connectivity connectivity = Connectivity::face6;
  bool pool_hemispheres = false;
  bool fd_enabled = true;
  double alpha = 0.05;
  int threads = 0; // 0 = hardware concurrency
};

struct StudyManifest {
  std::string label_dictionary_path;
  std::set<std::int32_t> csf_label_ids;
  std::vector<SubjectRecord> subjects;
  std::vector<std::string> methods;
  StudyOptions options;

  /// Parses the versioned JSON manifest; relative paths resolve against the
  /// manifest's directory.
  static StudyManifest load(const std::string& path);
};

// ---------------------------------------------------------------- tables

struct PairwiseComparison {
  std::string method_a;
  std::string method_b;
  double p_raw = 1.0;
  double p_bonferroni = 1.0;
  double cohens_d = 0.0;
  std::vector<std::string> flags;
};

struct ConditionSummary {
  std::string method;
  double mean = 0.0;
  double sd = 0.0;
};

/// One structure's volume comparison across reference + methods.
struct VolumeComparisonRow {
  std::string structure;
  int n = 0; // complete cases across every condition
  std::vector<ConditionSummary> conditions;
  std::optional<double> anova_f;
  double anova_df1 = 0.0;
  double anova_df2 = 0.0;
  std::optional<double> anova_p;
  std::vector<PairwiseComparison> pairwise;
  std::vector<std::string> flags;
};

/// Reference-vs-method FD comparison for one structure.
struct FdComparisonRow {
  std::string structure;
  std::string method;
  int n = 0;
  double ref_mean = 0.0, ref_sd = 0.0;
  double method_mean = 0.0, method_sd = 0.0;
  std::optional<double> t, p, cohens_d;
  std::vector<std::string> flags;
};

/// Bland-Altman agreement of one method against the reference for one
/// structure and one quantity ("volume_ml" or "fd").
struct AgreementRow {
  std::string structure;
  std::string method;
  std::string quantity;
  AgreementResult agreement;
};

struct AgeCorrelationRow {
  std::string method;
  std::string structure;
  std::string metric;
  int n = 0;
  std::optional<double> r, p;
  std::vector<std::string> flags;
};

/// Left-right asymmetry in the reference vs segmentation-related differences
/// for one paired structure, method and quantity.
struct PoolingRow {
  std::string structure; // left partner's name
  std::string method;
  std::string quantity;
  int n_side = 0;
  double side_mean_diff = 0.0; // mean(left - right), reference data
  std::optional<double> side_p, side_d;
  int n_seg = 0;
  double seg_mean_diff = 0.0; // mean(method - reference), both sides pooled
  bool side_exceeds_seg = false;
  std::vector<std::string> flags;
};

struct CouplingRow {
  std::string method;
  std::string structure; // "(all)" for the pooled row
  int n = 0;
  std::optional<double> spearman_rho, spearman_p;
  std::optional<double> theil_slope, theil_intercept;
  int outlier_count = 0; // MAD |z| > 3.5 in either delta; points retained
  std::vector<std::string> flags;
};

struct SubjectIssue {
  std::string subject_id;
  std::string message;
};

struct StudyReport {
  int schema_version = 1;
  std::vector<std::string> methods; // reference first
  std::vector<MetricRecord> records;
  std::vector<VolumeComparisonRow> volume_table;
  std::vector<FdComparisonRow> fd_table;
  std::vector<AgreementRow> agreement_table;
  std::vector<AgeCorrelationRow> age_table;
  std::vector<PoolingRow> pooling_table;
  std::vector<CouplingRow> coupling_table;
  std::vector<SubjectIssue> issues;
};

/// Loads the cohort, evaluates every (subject, method) pair, and runs the
/// statistical plan. Per-subject failures are recorded in `issues` and the
/// subject is skipped; the report is deterministic (row order independent of
/// manifest subject order and thread count). Whole-map rows reflect
/// CSF-subtracted maps when csf_label_ids is non-empty.
StudyReport run_study(const StudyManifest& manifest);

/// Left-right comparison on unpooled records (reference side differences vs
/// segmentation-related differences per method). Structures without a pool
/// partner are skipped.
std::vector<PoolingRow> hemispheric_check(const std::vector<MetricRecord>& records,
                                          const LabelDictionary& dict,
                                          const std::map<std::string, double>& subject_age);

/// Per (method, structure) Pearson correlation between age and a metric
/// ("dice", "iou", "hd95", "nmi", "volume_ml" or "fd").
std::vector<AgeCorrelationRow> age_correlation(const std::vector<MetricRecord>& records,
                                               const std::string& metric_name,
                                               const std::map<std::string, double>& subject_age);

/// Per-structure (and pooled) Spearman + Theil-Sen coupling of FD differences
/// against volume differences, method minus reference per subject.
std::vector<CouplingRow> fd_volume_coupling(const std::vector<MetricRecord>& records);

/// Same coupling computed from pre-built delta rows (the phantom experiment's
/// output), labeled under one method name.
struct DeltaPoint {
  std::string structure;
  double delta_volume_ml = 0.0;
  double delta_fd = 0.0;
};
std::vector<CouplingRow> fd_volume_coupling_from_deltas(const std::vector<DeltaPoint>& deltas,
                                                        const std::string& method_name);

/// Writes one CSV per table plus report.json into out_dir. Fixed column
/// order, RFC-4180 quoting, UTF-8, LF line endings, numbers at 6 significant
/// digits; byte-identical output for identical reports.
void emit_reports(const StudyReport& report, const std::string& out_dir);

} // namespace segquant

#endif
