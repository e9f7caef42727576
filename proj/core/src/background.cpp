#include "lagwave/background.hpp"

namespace lagwave {

BackgroundPoint ConstantBackground::at(double, double) const {
  BackgroundPoint p;
  p.v = state_.v;
  p.u = state_.u;
  p.theta = state_.theta;
  return p;
}

ContactBackground::ContactBackground(contact::ContactWaveSpec spec,
                                     euler::GasParams gas,
                                     contact::SolveOptions options)
    : spec_(spec),
      gas_(gas),
      profile_(contact::solve_selfsimilar(spec, gas, options)) {}

BackgroundPoint ContactBackground::at(double x, double t) const {
  const contact::ContactPoint c =
      contact::contact_profile(x, t, profile_, spec_, gas_);
  BackgroundPoint p;
  p.v = c.v;
  p.u = c.u;
  p.theta = c.theta;
  p.v_x = c.v_x;
  p.u_x = c.u_x;
  p.theta_x = c.theta_x;
  p.theta_xx = c.theta_xx;
  p.v_t = c.v_t;
  p.u_t = c.u_t;
  p.theta_t = c.theta_t;
  return p;
}

CompositeBackground::CompositeBackground(euler::FluidState left,
                                         euler::FluidState right,
                                         euler::GasParams gas,
                                         contact::SolveOptions options)
    : wave_(left, right, gas, options) {}

BackgroundPoint CompositeBackground::at(double x, double t) const {
  const composite::CompositeWave::Point c = wave_.at(x, t);
  BackgroundPoint p;
  p.v = c.v;
  p.u = c.u;
  p.theta = c.theta;
  p.v_x = c.v_x;
  p.u_x = c.u_x;
  p.theta_x = c.theta_x;
  p.theta_xx = c.theta_xx;
  p.v_t = c.v_t;
  p.u_t = c.u_t;
  p.theta_t = c.theta_t;
  return p;
}

}  // namespace lagwave
