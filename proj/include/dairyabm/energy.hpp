#pragma once

#include <cmath>
#include <stdexcept>

namespace dairyabm {

/// Non-negative amount of electrical energy in kilowatt-hours.
class EnergyKwh {
  public:
    EnergyKwh() = default;

    explicit EnergyKwh(double value) : value_(value) {
        if (!std::isfinite(value) || value < 0.0) {
            throw std::invalid_argument("EnergyKwh requires a finite, non-negative value");
        }
    }

    double value() const { return value_; }

    EnergyKwh& operator+=(EnergyKwh other) {
        value_ += other.value_;
        return *this;
    }

    friend EnergyKwh operator+(EnergyKwh a, EnergyKwh b) { return EnergyKwh(a.value_ + b.value_); }

    friend bool operator==(EnergyKwh a, EnergyKwh b) { return a.value_ == b.value_; }
    friend bool operator<(EnergyKwh a, EnergyKwh b) { return a.value_ < b.value_; }

  private:
    double value_ = 0.0;
};

} // namespace dairyabm
