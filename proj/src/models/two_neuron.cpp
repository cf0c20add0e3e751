#include "fmhnn/models/two_neuron.hpp"

#include <cmath>

namespace fmhnn::models {

Eigen::Vector3d rhs_two_neuron(const FmhnnState& s, const FmhnnParams& p) {
  const double t1 = std::tanh(s.x1);
  const double t2 = std::tanh(s.x2);
  const double im = p.k * s.phi * (s.x1 - s.x2);
  return {-s.x1 + p.b1 * t1 + p.b2 * t2 + im,
          -s.x2 + p.b3 * t1 + p.b4 * t2 - im,
          s.x1 - s.x2};
}

Eigen::Matrix3d jacobian_two_neuron(const FmhnnState& s, const FmhnnParams& p) {
  const double c1 = std::cosh(s.x1);
  const double c2 = std::cosh(s.x2);
  const double sech1 = 1.0 / (c1 * c1);
  const double sech2 = 1.0 / (c2 * c2);
  const double kphi = p.k * s.phi;
  const double kd = p.k * (s.x1 - s.x2);
  Eigen::Matrix3d j;
  j << -1.0 + p.b1 * sech1 + kphi, p.b2 * sech2 - kphi, kd,
       p.b3 * sech1 - kphi, -1.0 + p.b4 * sech2 + kphi, -kd,
       1.0, -1.0, 0.0;
  return j;
}

fode::SystemDef make_two_neuron_system(const FmhnnParams& p) {
  fode::SystemDef def;
  def.dimension = 3;
  def.name = "two_neuron";
  def.rhs = [p](double, const Eigen::VectorXd& x, Eigen::VectorXd& dx) {
    dx = rhs_two_neuron({x[0], x[1], x[2]}, p);
  };
  def.jacobian = [p](const Eigen::VectorXd& x, Eigen::MatrixXd& jac) {
    jac = jacobian_two_neuron({x[0], x[1], x[2]}, p);
  };
  return def;
}

}  // namespace fmhnn::models
