#pragma once

#include <functional>
#include <utility>

#include "lagwave/composite_wave.hpp"
#include "lagwave/contact_wave.hpp"
#include "lagwave/gas.hpp"

namespace lagwave {

/// Smooth reference solution sampled pointwise: values, the spatial
/// derivatives the scheme needs, and exact time derivatives used to anchor
/// boundary nodes.
struct BackgroundPoint {
    double v = 1.0;
    double u = 0.0;
    double theta = 1.0;
    double E = 0.0;
    double b = 0.0;

    double v_x = 0.0;
    double u_x = 0.0;
    double theta_x = 0.0;
    double theta_xx = 0.0;

    double v_t = 0.0;
    double u_t = 0.0;
    double theta_t = 0.0;
    double E_t = 0.0;
    double b_t = 0.0;
};

class Background {
  public:
    virtual ~Background() = default;
    virtual BackgroundPoint at(double x, double t) const = 0;
};

/// Uniform fluid state, zero electromagnetic field.
class ConstantBackground final : public Background {
  public:
    explicit ConstantBackground(euler::FluidState state) : state_(state) {}
    BackgroundPoint at(double x, double t) const override;

  private:
    euler::FluidState state_;
};

/// Diffusion layer in the temperature with velocity slaved to the heat flux.
class ContactBackground final : public Background {
  public:
    ContactBackground(contact::ContactWaveSpec spec, euler::GasParams gas,
                      contact::SolveOptions options = {});
    BackgroundPoint at(double x, double t) const override;

    const contact::SelfSimilarProfile& profile() const { return profile_; }
    const contact::ContactWaveSpec& spec() const { return spec_; }

  private:
    contact::ContactWaveSpec spec_;
    euler::GasParams gas_;
    contact::SelfSimilarProfile profile_;
};

/// Contact layer plus two rarefaction flanks glued by state superposition.
class CompositeBackground final : public Background {
  public:
    CompositeBackground(euler::FluidState left, euler::FluidState right,
                        euler::GasParams gas, contact::SolveOptions options = {});
    BackgroundPoint at(double x, double t) const override;

    const composite::CompositeWave& wave() const { return wave_; }

  private:
    composite::CompositeWave wave_;
};

/// Arbitrary analytic field, used by manufactured-solution and scheme tests.
class FunctionBackground final : public Background {
  public:
    using Fn = std::function<BackgroundPoint(double, double)>;
    explicit FunctionBackground(Fn fn) : fn_(std::move(fn)) {}
    BackgroundPoint at(double x, double t) const override { return fn_(x, t); }

  private:
    Fn fn_;
};

}  // namespace lagwave
