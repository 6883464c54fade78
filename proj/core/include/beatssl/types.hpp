#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beatssl {

// Canonical clinical lead order used everywhere in this project.
// Index 1 (lead II) is the beat-classifier lead.
inline constexpr int kNumLeads = 12;
inline constexpr int kLeadII = 1;
const std::vector<std::string>& lead_names();  // {"I","II","III","aVR",...}

// AAMI heartbeat superclasses.
enum class BeatClass : char {
  kNormal = 'N',
  kSupraventricular = 'S',
  kVentricular = 'V',
  kFusion = 'F',
  kUnknown = 'Q',
};

char to_char(BeatClass c);
BeatClass beat_class_from_char(char c);

// R-peak positions plus per-beat class labels.
struct BeatAnnotation {
  std::vector<int> r_peaks;          // strictly increasing sample indices in [0, D)
  std::vector<BeatClass> classes;    // one per peak

  int size() const { return static_cast<int>(r_peaks.size()); }

  // Checks monotonicity, the 0.2 s refractory spacing, index range and arity.
  void validate(int n_samples, double sampling_rate) const;
};

// Per-sample wave labels over {background, P, QRS, T}.
struct SegmentationMask {
  static constexpr std::uint8_t kBackground = 0;
  static constexpr std::uint8_t kP = 1;
  static constexpr std::uint8_t kQrs = 2;
  static constexpr std::uint8_t kT = 3;
  static constexpr int kNumClasses = 4;

  std::vector<std::uint8_t> labels;

  int size() const { return static_cast<int>(labels.size()); }

  // Checks length, label range, and that every contiguous nonzero run is a
  // single class.
  void validate(int n_samples) const;
};

// One multilead record. Signal rows follow lead_names() order; units are mV.
struct ECGRecord {
  Eigen::MatrixXd signal;            // leads x samples
  double sampling_rate = 0.0;        // Hz
  std::string record_id;
  int fold = 0;                      // 1..10; 0 = unassigned
  std::optional<BeatAnnotation> beat_annotations;
  std::optional<SegmentationMask> wave_masks;
  std::vector<std::string> rhythm_labels;  // sorted unique class identifiers

  int leads() const { return static_cast<int>(signal.rows()); }
  int samples() const { return static_cast<int>(signal.cols()); }
  double duration_s() const {
    return sampling_rate > 0 ? samples() / sampling_rate : 0.0;
  }

  // Enforces the record invariants: 12 leads, finite samples, consistent
  // annotation/mask shapes.
  void validate() const;
};

// Fixed-length per-record feature vector (see features.hpp for the set).
struct FeatureVector {
  Eigen::VectorXd values;
  std::vector<std::string> feature_names;

  int size() const { return static_cast<int>(values.size()); }
};

}  // namespace beatssl
