#include "beatssl/types.hpp"

#include <algorithm>
#include <cmath>

#include "beatssl/errors.hpp"

namespace beatssl {

const std::vector<std::string>& lead_names() {
  static const std::vector<std::string> kNames = {
      "I", "II", "III", "aVR", "aVL", "aVF",
      "V1", "V2", "V3", "V4", "V5", "V6"};
  return kNames;
}

char to_char(BeatClass c) { return static_cast<char>(c); }

BeatClass beat_class_from_char(char c) {
  switch (c) {
    case 'N': return BeatClass::kNormal;
    case 'S': return BeatClass::kSupraventricular;
    case 'V': return BeatClass::kVentricular;
    case 'F': return BeatClass::kFusion;
    case 'Q': return BeatClass::kUnknown;
    default:
      throw ValidationError(std::string("unknown beat class '") + c + "'");
  }
}

void BeatAnnotation::validate(int n_samples, double sampling_rate) const {
  if (classes.size() != r_peaks.size()) {
    throw ValidationError("beat annotation: classes/r_peaks length mismatch");
  }
  const double min_gap = 0.2 * sampling_rate;
  for (size_t i = 0; i < r_peaks.size(); ++i) {
    if (r_peaks[i] < 0 || r_peaks[i] >= n_samples) {
      throw ValidationError("beat annotation: r_peak out of range");
    }
    if (i > 0 && static_cast<double>(r_peaks[i] - r_peaks[i - 1]) < min_gap) {
      throw ValidationError(
          "beat annotation: consecutive r_peaks closer than 0.2 s");
    }
  }
}

void SegmentationMask::validate(int n_samples) const {
  if (size() != n_samples) {
    throw ValidationError("segmentation mask: length mismatch");
  }
  std::uint8_t prev = kBackground;
  for (std::uint8_t v : labels) {
    if (v >= kNumClasses) {
      throw ValidationError("segmentation mask: label out of range");
    }
    if (v != kBackground && prev != kBackground && v != prev) {
      throw ValidationError(
          "segmentation mask: adjacent nonzero samples of different classes");
    }
    prev = v;
  }
}

void ECGRecord::validate() const {
  if (leads() != kNumLeads) {
    throw ShapeError("record '" + record_id + "': expected 12 leads, got " +
                     std::to_string(leads()));
  }
  if (sampling_rate <= 0.0) {
    throw ValidationError("record '" + record_id + "': sampling_rate must be positive");
  }
  if (!signal.allFinite()) {
    throw ValidationError("record '" + record_id + "': signal contains NaN/Inf");
  }
  if (fold < 0 || fold > 10) {
    throw ValidationError("record '" + record_id + "': fold must be in 1..10 (or 0)");
  }
  if (beat_annotations) beat_annotations->validate(samples(), sampling_rate);
  if (wave_masks) wave_masks->validate(samples());
  for (size_t i = 1; i < rhythm_labels.size(); ++i) {
    if (!(rhythm_labels[i - 1] < rhythm_labels[i])) {
      throw ValidationError("record '" + record_id +
                            "': rhythm_labels must be sorted and unique");
    }
  }
}

}  // namespace beatssl
