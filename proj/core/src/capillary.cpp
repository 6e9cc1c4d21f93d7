#include "slotbrillouin/capillary.hpp"

#include <algorithm>
#include <cmath>

#include "slotbrillouin/errors.hpp"

namespace slotbrillouin {

void CapillaryModel::validate() const {
    if (!(vdw_coefficient > 0.0)) throw DomainError("capillary: van der Waals coefficient must be positive");
    if (surface_tension < 0.0) throw DomainError("capillary: surface tension must be >= 0");
    if (!(slot_width > 0.0) || !(height > 0.0)) throw DomainError("capillary: slot dimensions must be positive");
    if (!(film_thickness > 0.0)) throw DomainError("capillary: film thickness must be positive");
    if (film_thickness >= 0.5 * slot_width || film_thickness >= height) {
        throw ModelInvalidError("capillary: film thickness reaches half the slot width; the slot is already filled");
    }
}

double vdw_area_integral(double w, double h, double d) {
    // Level set z = t (t < min(w/2, h)) has length 2(h - t) + (w - 2t).
    const double top = std::min(0.5 * w, h);
    if (d >= top) return 0.0;
    const double a = 2.0 * h + w;
    return a * 0.5 * (1.0 / (d * d) - 1.0 / (top * top)) - 4.0 * (1.0 / d - 1.0 / top);
}

double fill_energy_delta(const CapillaryModel& m) {
    m.validate();
    const double surface = m.surface_tension * (m.slot_width - 2.0 * (m.height - m.film_thickness));
    return surface + m.vdw_coefficient * vdw_area_integral(m.slot_width, m.height, m.film_thickness);
}

std::string_view to_string(FillStatus s) noexcept {
    switch (s) {
        case FillStatus::transition: return "transition";
        case FillStatus::always_filled: return "always-filled";
        case FillStatus::never_filled: return "never-filled";
    }
    return "unknown";
}

FillTransition fill_transition_thickness(const CapillaryModel& model) {
    CapillaryModel m = model;
    const double d_max = std::min(0.5 * m.slot_width, m.height) * (1.0 - 1e-9);
    const double d_min = std::min(1e-12, 1e-6 * d_max);
    auto delta = [&m](double d) {
        m.film_thickness = d;
        return fill_energy_delta(m);
    };

    constexpr int samples = 200;
    const double ratio = std::log(d_max / d_min);
    double prev_d = d_min;
    double prev = delta(d_min);
    FillTransition out;
    for (int k = 1; k < samples; ++k) {
        const double d = d_min * std::exp(ratio * k / (samples - 1));
        const double cur = delta(d);
        if ((prev > 0.0) != (cur > 0.0)) {
            double lo = prev_d;
            double hi = d;
            const bool lo_positive = prev > 0.0;
            while (hi - lo > 1e-6 * lo && hi - lo > 1e-15) {
                const double mid = 0.5 * (lo + hi);
                ((delta(mid) > 0.0) == lo_positive ? lo : hi) = mid;
            }
            out.thickness = 0.5 * (lo + hi);
            out.residual = delta(out.thickness);
            return out;
        }
        prev_d = d;
        prev = cur;
    }
    out.status = prev > 0.0 ? FillStatus::never_filled : FillStatus::always_filled;
    return out;
}

}  // namespace slotbrillouin
