#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "slotbrillouin/capillary.hpp"
#include "slotbrillouin/errors.hpp"

using namespace slotbrillouin;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, 50);
}

// Brute-force integral of min(x, w - x, y)^-3 over [d, w - d] x [d, h]: the
// set of points farther than d from all three walls. Split at x = w/2 and at
// the kink y = min(x, w - x) so every piece is smooth.
double brute_force(double w, double h, double d) {
    auto inner = [&](double x) {
        const double side = std::min(x, w - x);
        auto f = [&](double y) { return std::pow(std::min(side, y), -3.0); };
        const double kink = std::clamp(side, d, h);
        double s = 0.0;
        if (kink > d) s += integrate(f, d, kink, 1e-10 * std::pow(d, -2.0));
        if (h > kink) s += integrate(f, kink, h, 1e-10 * std::pow(d, -2.0));
        return s;
    };
    const double tol = 1e-9 / d;
    return integrate(inner, d, 0.5 * w, tol) + integrate(inner, 0.5 * w, w - d, tol);
}

CapillaryModel model(double d) {
    CapillaryModel m;
    m.film_thickness = d;
    return m;
}

}  // namespace

TEST(Capillary, ClosedFormMatchesQuadrature) {
    for (auto [w, h, d] : {std::tuple{50e-9, 220e-9, 2e-9}, {50e-9, 220e-9, 0.5e-9}, {150e-9, 220e-9, 10e-9},
                           {300e-9, 100e-9, 5e-9}}) {
        const double exact = vdw_area_integral(w, h, d);
        const double numeric = brute_force(w, h, d);
        EXPECT_LT(std::abs(exact / numeric - 1.0), 1e-5) << w << " " << h << " " << d;
    }
}

TEST(Capillary, DefaultHeliumTransition) {
    const auto t = fill_transition_thickness(model(1e-9));
    ASSERT_EQ(t.status, FillStatus::transition);
    EXPECT_GT(t.thickness, 0.5e-9);
    EXPECT_LT(t.thickness, 10e-9);
    EXPECT_GT(fill_energy_delta(model(t.thickness * (1 - 1e-5))), 0.0);
    EXPECT_LT(fill_energy_delta(model(t.thickness * (1 + 1e-5))), 0.0);
    EXPECT_EQ(t.residual, fill_energy_delta(model(t.thickness)));
    EXPECT_GT(fill_energy_delta(model(0.5 * t.thickness)), 0.0);
    EXPECT_LT(fill_energy_delta(model(2.0 * t.thickness)), 0.0);
}

TEST(Capillary, Monotonicity) {
    CapillaryModel base = model(1e-9);
    const double d0 = fill_transition_thickness(base).thickness;
    CapillaryModel more_sigma = base;
    more_sigma.surface_tension *= 2;
    CapillaryModel more_alpha = base;
    more_alpha.vdw_coefficient *= 2;
    EXPECT_LT(fill_transition_thickness(more_sigma).thickness, d0);
    EXPECT_GT(fill_transition_thickness(more_alpha).thickness, d0);

    double prev = fill_energy_delta(base);
    for (double s : {4e-4, 5e-4, 1e-3}) {
        CapillaryModel m = base;
        m.surface_tension = s;
        const double e = fill_energy_delta(m);
        EXPECT_LT(e, prev);
        prev = e;
    }
}

TEST(Capillary, Limits) {
    CapillaryModel no_tension = model(1e-9);
    no_tension.surface_tension = 0.0;
    for (double d : {0.1e-9, 1e-9, 10e-9, 24e-9}) {
        no_tension.film_thickness = d;
        EXPECT_GT(fill_energy_delta(no_tension), 0.0);
    }
    EXPECT_EQ(fill_transition_thickness(no_tension).status, FillStatus::never_filled);

    CapillaryModel shallow = model(1e-9);  // w >> h with strong tension fills readily
    shallow.slot_width = 400e-9;
    shallow.height = 20e-9;
    shallow.surface_tension = 1.0;
    EXPECT_GT(fill_energy_delta(shallow), 0.0);
    EXPECT_EQ(fill_transition_thickness(shallow).status, FillStatus::never_filled);

    CapillaryModel deep = model(1e-9);
    deep.surface_tension = 1.0;
    EXPECT_LT(fill_energy_delta(deep), 0.0);
}

TEST(Capillary, FilmsMeetingIsInvalid) {
    EXPECT_THROW(fill_energy_delta(model(25e-9)), ModelInvalidError);
    EXPECT_THROW(fill_energy_delta(model(-1e-9)), DomainError);
    EXPECT_EQ(to_string(FillStatus::always_filled), "always-filled");
}
