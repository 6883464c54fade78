#pragma once

#include <Eigen/Dense>
#include <random>

namespace beatssl::vcg {

// 12-lead ECG <-> 3-axis VCG conversion via the Kors regression matrix
// (Kors et al., Eur Heart J 1990). Columns follow lead_names() order; the
// four derived limb leads (III, aVR, aVL, aVF) carry zero coefficients.
// The inverse direction uses the Moore-Penrose pseudo-inverse, computed
// once by SVD with singular values below 1e-12 treated as zero.
class KorsTransform {
 public:
  KorsTransform();

  const Eigen::Matrix<double, 3, 12>& forward() const { return forward_; }
  const Eigen::Matrix<double, 12, 3>& inverse() const { return inverse_; }

  // M_Kors * ecg. Requires exactly 12 rows of finite samples.
  Eigen::MatrixXd ecg_to_vcg(const Eigen::MatrixXd& ecg) const;

  // M_Kors^+ * vcg. Requires exactly 3 rows.
  Eigen::MatrixXd vcg_to_ecg(const Eigen::MatrixXd& vcg) const;

  // Shared immutable instance (construction runs the SVD once).
  static const KorsTransform& instance();

 private:
  Eigen::Matrix<double, 3, 12> forward_;
  Eigen::Matrix<double, 12, 3> inverse_;
};

// Rotates every column of a 3xD VCG by `theta_deg` about `axis` (Rodrigues).
// `axis` must have unit norm within 1e-9.
Eigen::MatrixXd rotate_vcg(const Eigen::MatrixXd& vcg, double theta_deg,
                           const Eigen::Vector3d& axis);

struct AugmentParams {
  double theta_min_deg = -15.0;
  double theta_max_deg = 15.0;
  double scale_min = 1.0;
  double scale_max = 1.2;
  double noise_sigma = 0.05;  // mV, added in the ECG domain

  void validate() const;
};

// One stochastic view: ecg -> VCG -> rotate -> scale -> ECG -> additive noise.
// Draw order from `rng` is fixed (theta, axis, scale, noise) so outputs are
// reproducible for a given generator state. Rotation axis is uniform on the
// unit sphere; rotation is applied before scaling (the two commute up to the
// scalar).
Eigen::MatrixXd augment(const Eigen::MatrixXd& ecg, const AugmentParams& params,
                        std::mt19937_64& rng);

// Uniformly distributed unit vector (three normal draws, renormalized).
Eigen::Vector3d random_unit_axis(std::mt19937_64& rng);

}  // namespace beatssl::vcg
