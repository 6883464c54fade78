#include "beatssl/vcg.hpp"

#include <cmath>
#include <numbers>

#include "beatssl/errors.hpp"
#include "beatssl/types.hpp"

namespace beatssl::vcg {

namespace {

// Kors et al. 1990 regression coefficients, rows (X, Y, Z) by lead
// {I, II, III, aVR, aVL, aVF, V1..V6}. Limb leads III/aVR/aVL/aVF are linear
// combinations of I and II and carry no independent information, hence zeros.
constexpr double kKors[3][12] = {
    // I      II    III   aVR   aVL   aVF    V1     V2     V3     V4     V5    V6
    {0.38, -0.07, 0.0, 0.0, 0.0, 0.0, -0.13, 0.05, -0.01, 0.14, 0.06, 0.54},
    {-0.07, 0.93, 0.0, 0.0, 0.0, 0.0, 0.06, -0.02, -0.05, 0.06, -0.17, 0.13},
    {0.11, -0.23, 0.0, 0.0, 0.0, 0.0, -0.43, -0.06, -0.14, -0.20, -0.11, 0.31},
};

constexpr double kSingularValueCutoff = 1e-12;

}  // namespace

KorsTransform::KorsTransform() {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 12; ++c) forward_(r, c) = kKors[r][c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      forward_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd inv_sigma = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < 3; ++i) {
    const double s = svd.singularValues()(i);
    if (s > kSingularValueCutoff) inv_sigma(i) = 1.0 / s;
  }
  // V (12x3 block) * Sigma^-1 * U^T
  inverse_ = svd.matrixV().leftCols<3>() * inv_sigma.asDiagonal() *
             svd.matrixU().transpose();
}

const KorsTransform& KorsTransform::instance() {
  static const KorsTransform kInstance;
  return kInstance;
}

Eigen::MatrixXd KorsTransform::ecg_to_vcg(const Eigen::MatrixXd& ecg) const {
  if (ecg.rows() != kNumLeads) {
    throw ShapeError("ecg_to_vcg: expected 12 rows, got " +
                     std::to_string(ecg.rows()));
  }
  if (!ecg.allFinite()) {
    throw ValidationError("ecg_to_vcg: signal contains NaN/Inf");
  }
  return forward_ * ecg;
}

Eigen::MatrixXd KorsTransform::vcg_to_ecg(const Eigen::MatrixXd& vcg) const {
  if (vcg.rows() != 3) {
    throw ShapeError("vcg_to_ecg: expected 3 rows, got " +
                     std::to_string(vcg.rows()));
  }
  return inverse_ * vcg;
}

Eigen::MatrixXd rotate_vcg(const Eigen::MatrixXd& vcg, double theta_deg,
                           const Eigen::Vector3d& axis) {
  if (vcg.rows() != 3) {
    throw ShapeError("rotate_vcg: expected 3 rows, got " +
                     std::to_string(vcg.rows()));
  }
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw ValidationError("rotate_vcg: axis must have unit norm");
  }
  const double theta = theta_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d cross;
  cross << 0, -axis.z(), axis.y(),
           axis.z(), 0, -axis.x(),
          -axis.y(), axis.x(), 0;
  const Eigen::Matrix3d rot = c * Eigen::Matrix3d::Identity() + s * cross +
                              (1.0 - c) * (axis * axis.transpose());
  return rot * vcg;
}

void AugmentParams::validate() const {
  if (theta_min_deg > theta_max_deg || theta_min_deg < -180.0 ||
      theta_max_deg > 180.0) {
    throw ConfigError("augment: theta_range must be within [-180, 180]");
  }
  if (scale_min <= 0.0 || scale_min > scale_max) {
    throw ConfigError("augment: scale_range must be positive and ordered");
  }
  if (noise_sigma < 0.0) {
    throw ConfigError("augment: noise_sigma must be >= 0");
  }
}

Eigen::Vector3d random_unit_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  while (true) {
    Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
    const double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

Eigen::MatrixXd augment(const Eigen::MatrixXd& ecg, const AugmentParams& params,
                        std::mt19937_64& rng) {
  params.validate();
  const auto& kors = KorsTransform::instance();

  std::uniform_real_distribution<double> theta_dist(params.theta_min_deg,
                                                    params.theta_max_deg);
  const double theta = theta_dist(rng);
  const Eigen::Vector3d axis = random_unit_axis(rng);
  std::uniform_real_distribution<double> scale_dist(params.scale_min,
                                                    params.scale_max);
  const double scale = scale_dist(rng);

  Eigen::MatrixXd vcg = kors.ecg_to_vcg(ecg);
  vcg = rotate_vcg(vcg, theta, axis);
  vcg *= scale;
  Eigen::MatrixXd out = kors.vcg_to_ecg(vcg);

  if (params.noise_sigma > 0.0) {
    std::normal_distribution<double> noise(0.0, params.noise_sigma);
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      for (Eigen::Index r = 0; r < out.rows(); ++r) {
        out(r, c) += noise(rng);
      }
    }
  }
  return out;
}

}  // namespace beatssl::vcg
