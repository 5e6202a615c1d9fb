#ifndef RECUR_DATA_HPP
#define RECUR_DATA_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace recur {

// One study subject on the calendar clock. event_times are strictly
// increasing and bounded by censoring_time (an event tied with the
// censoring time is kept as an event; the censoring row is dropped at
// layout expansion).
struct Subject {
  int id = 0;
  std::vector<double> event_times;
  double censoring_time = 0.0;  // end of follow-up, T_i
  std::vector<double> covariates;

  int event_count() const { return static_cast<int>(event_times.size()); }
};

// Number of events observed in [0, t].
int event_count(const Subject& s, double t);

struct RecurrentDataset {
  std::vector<Subject> subjects;
  int p = 0;
  std::vector<std::uint8_t> active_mask;  // per-covariate truth, empty if unknown

  int n() const { return static_cast<int>(subjects.size()); }
  // Throws std::invalid_argument on any broken invariant.
  void validate() const;
};

enum class ModelKind { AG, PWP, WLW, Frailty };
enum class Timescale { Calendar, Gap, CountingProcess };
enum class RiskSetKind { Unrestricted, Restricted, SemiRestricted };

const char* model_name(ModelKind m);
ModelKind model_from_name(const std::string& name);

struct LayoutRow {
  int subject_index = 0;  // position in dataset.subjects
  double start = 0.0;
  double stop = 0.0;
  int status = 0;   // 1 = event at stop
  int stratum = 1;  // 1-based
};

// Expanded counting-process rows for one model. Rows reference covariates
// through the originating dataset, which must outlive the layout.
struct ModelLayout {
  std::vector<LayoutRow> rows;
  Timescale timescale = Timescale::CountingProcess;
  RiskSetKind risk_set = RiskSetKind::Unrestricted;
  int n_strata = 1;
  int p = 0;
  const RecurrentDataset* data = nullptr;

  const double* covariates(int row) const {
    return data->subjects[rows[row].subject_index].covariates.data();
  }
  int n_rows() const { return static_cast<int>(rows.size()); }
};

// Risk-set/timescale expansion per model. AG and Frailty share the
// counting-process unrestricted layout; PWP restricts stratum k to subjects
// with at least k-1 events; WLW puts every subject in every stratum up to
// k_max on the calendar scale. k_max_override > 0 pins the WLW stratum count
// (used to apply a training-split k_max to other data); 0 means the maximum
// event count observed in `data`.
ModelLayout expand_layout(const RecurrentDataset& data, ModelKind model,
                          int k_max_override = 0);

// Subject-level split; train side gets round(fraction * n) subjects.
// Deterministic in seed. Throws if either side ends up with fewer than two
// subjects.
std::pair<RecurrentDataset, RecurrentDataset> train_test_split(
    const RecurrentDataset& data, double fraction, std::uint64_t seed);

}  // namespace recur

#endif  // RECUR_DATA_HPP
