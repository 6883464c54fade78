#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beatssl/types.hpp"

namespace beatssl::synth {

// Synthetic rhythm classes. Each record carries exactly one as its
// rhythm label; per-beat AAMI classes are decided beat by beat.
//   regular  - sinus rhythm, RR 0.8..1.0 s, narrow QRS
//   tachy    - fast sinus, RR 0.45..0.6 s
//   irregular- jittered RR with premature (S) beats
//   wide_qrs - dominant wide ventricular (V) beats at sinus rates
const std::vector<std::string>& rhythm_class_names();

struct SynthParams {
  int n_records = 1;
  double duration_s = 10.0;
  double sampling_rate = 500.0;
  std::map<std::string, double> class_mix = {{"regular", 1.0}};
  std::uint64_t seed = 0;
  // Measurement texture. Ground truth (peaks, classes, masks) stays exact.
  double noise_sigma = 0.01;        // mV
  double baseline_wander_amp = 0.04;  // mV
};

// Generates records with ground-truth R-peaks, per-beat classes, wave masks
// and a single rhythm label each. Deterministic for fixed params+seed; each
// record depends only on (seed, record index). Folds are assigned
// round-robin 1..10 in record order.
std::vector<ECGRecord> generate(const SynthParams& params);

}  // namespace beatssl::synth
