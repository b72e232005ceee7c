// SPDX-License-Identifier: Apache-2.0
//
// sarshare: IMT / EESS (active) aggregate interference simulator
// Copyright (C) 2026 The sarshare authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "sarshare/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace sarshare
{
    namespace
    {
        using constants::kEarthRadiusKm;
        using constants::kPi;

        constexpr double kKeplerTolerance = 1e-12;
        constexpr int kKeplerMaxIterations = 50;

        double solve_kepler(double mean_anomaly, double e)
        {
            double E = e < 0.8 ? mean_anomaly : kPi;
            for (int i = 0; i < kKeplerMaxIterations; ++i)
            {
                const double f = E - e * std::sin(E) - mean_anomaly;
                const double step = f / (1.0 - e * std::cos(E));
                E -= step;
                if (std::abs(step) < kKeplerTolerance)
                    return E;
            }
            throw std::runtime_error("Kepler iteration did not converge");
        }

        double mean_anomaly_from_true(double nu, double e)
        {
            const double E = 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(nu / 2.0),
                                              std::sqrt(1.0 + e) * std::cos(nu / 2.0));
            return E - e * std::sin(E);
        }

        // Rotation about z by -angle: inertial -> Earth-fixed.
        Vec3 rotate_z(const Vec3 &v, double angle)
        {
            const double c = std::cos(angle), s = std::sin(angle);
            return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
        }

        double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
    }

    double KeplerianElements::semi_major_axis_km() const
    {
        return (kEarthRadiusKm + periapsis_altitude_km) / (1.0 - eccentricity);
    }

    double KeplerianElements::apoapsis_altitude_km() const
    {
        return semi_major_axis_km() * (1.0 + eccentricity) - kEarthRadiusKm;
    }

    double KeplerianElements::period_s() const
    {
        const double a = semi_major_axis_km();
        return 2.0 * kPi * std::sqrt(a * a * a / constants::kEarthMuKm3S2);
    }

    void KeplerianElements::validate() const
    {
        if (!(eccentricity >= 0.0 && eccentricity < 1.0))
            throw std::invalid_argument("eccentricity must lie in [0, 1); got " + std::to_string(eccentricity));
        if (!(inclination_deg >= 0.0 && inclination_deg <= 180.0))
            throw std::invalid_argument("inclination must lie in [0, 180] degrees");
        if (!(semi_major_axis_km() > kEarthRadiusKm) || periapsis_altitude_km < 0.0)
            throw std::invalid_argument("periapsis lies below the Earth surface");
    }

    KeplerianElements KeplerianElements::sar_study_orbit(AngleUnit arg_unit)
    {
        KeplerianElements el;
        el.periapsis_altitude_km = 240.2753;
        el.inclination_deg = 88.0008;
        el.raan_deg = 273.9587;
        el.eccentricity = 0.0202;
        el.true_anomaly_deg = 180.4155;
        el.arg_periapsis_deg = arg_unit == AngleUnit::degrees ? 180.9383 : rad_to_deg(180.9383);
        return el;
    }

    Vec3 to_ecef(const GeodeticPosition &pos)
    {
        const double lat = deg_to_rad(pos.latitude_deg), lon = deg_to_rad(pos.longitude_deg);
        const double r = kEarthRadiusKm + pos.altitude_km;
        return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon), r * std::sin(lat)};
    }

    GeodeticPosition to_geodetic(const Vec3 &p)
    {
        const double r = p.norm();
        return {rad_to_deg(std::atan2(p.y, p.x)), rad_to_deg(std::asin(clamp_unit(p.z / r))), r - kEarthRadiusKm};
    }

    EnuBasis enu_basis(double longitude_deg, double latitude_deg)
    {
        const double lat = deg_to_rad(latitude_deg), lon = deg_to_rad(longitude_deg);
        const double sl = std::sin(lat), cl = std::cos(lat), so = std::sin(lon), co = std::cos(lon);
        return {{-so, co, 0.0}, {-sl * co, -sl * so, cl}, {cl * co, cl * so, sl}};
    }

    InertialState propagate_inertial(const KeplerianElements &el, double t_seconds)
    {
        el.validate();
        const double a = el.semi_major_axis_km(), e = el.eccentricity;
        const double n = std::sqrt(constants::kEarthMuKm3S2 / (a * a * a));
        const double M0 = mean_anomaly_from_true(deg_to_rad(el.true_anomaly_deg), e);
        const double M = std::remainder(M0 + n * t_seconds, 2.0 * kPi);
        const double E = solve_kepler(M, e);

        const double cosE = std::cos(E), sinE = std::sin(E);
        const double sq = std::sqrt(1.0 - e * e);
        const double r = a * (1.0 - e * cosE);
        // Perifocal frame
        const double xp = a * (cosE - e), yp = a * sq * sinE;
        const double vfac = std::sqrt(constants::kEarthMuKm3S2 * a) / r;
        const double vxp = -vfac * sinE, vyp = vfac * sq * cosE;

        const double O = deg_to_rad(el.raan_deg), i = deg_to_rad(el.inclination_deg), w = deg_to_rad(el.arg_periapsis_deg);
        const double cO = std::cos(O), sO = std::sin(O), ci = std::cos(i), si = std::sin(i), cw = std::cos(w), sw = std::sin(w);
        const Vec3 P{cO * cw - sO * sw * ci, sO * cw + cO * sw * ci, sw * si};
        const Vec3 Q{-cO * sw - sO * cw * ci, -sO * sw + cO * cw * ci, cw * si};
        return {P * xp + Q * yp, P * vxp + Q * vyp};
    }

    SatelliteState propagate_orbit(const KeplerianElements &el, double t_seconds)
    {
        const InertialState s = propagate_inertial(el, t_seconds);
        const double theta = constants::kEarthRotationRadS * t_seconds;
        SatelliteState out;
        out.position_km = rotate_z(s.position_km, -theta);
        const Vec3 omega{0.0, 0.0, constants::kEarthRotationRadS};
        out.velocity_kms = rotate_z(s.velocity_kms - omega.cross(s.position_km), -theta);
        out.geodetic = to_geodetic(out.position_km);
        return out;
    }

    double specific_orbital_energy(const InertialState &s)
    {
        return 0.5 * s.velocity_kms.dot(s.velocity_kms) - constants::kEarthMuKm3S2 / s.position_km.norm();
    }

    double time_to_periapsis_s(const KeplerianElements &el)
    {
        el.validate();
        const double M0 = mean_anomaly_from_true(deg_to_rad(el.true_anomaly_deg), el.eccentricity);
        double dM = std::fmod(2.0 * kPi - M0, 2.0 * kPi);
        if (dM < 0.0)
            dM += 2.0 * kPi;
        return dM / (2.0 * kPi) * el.period_s();
    }

    double time_to_apoapsis_s(const KeplerianElements &el)
    {
        el.validate();
        const double M0 = mean_anomaly_from_true(deg_to_rad(el.true_anomaly_deg), el.eccentricity);
        double dM = std::fmod(kPi - M0, 2.0 * kPi);
        if (dM < 0.0)
            dM += 2.0 * kPi;
        return dM / (2.0 * kPi) * el.period_s();
    }

    double orbit_miss_distance_km(const KeplerianElements &el, const GeodeticPosition &target, double step_s)
    {
        if (!(step_s > 0.0))
            throw std::invalid_argument("orbit sampling step must be positive");
        const double period = el.period_s();
        const double rt = kEarthRadiusKm + target.altitude_km;
        const double lat_t = deg_to_rad(target.latitude_deg);
        double best = std::numeric_limits<double>::infinity();
        for (double t = 0.0; t < period; t += step_s)
        {
            const InertialState s = propagate_inertial(el, t);
            const double rs = s.position_km.norm();
            const double lat_s = std::asin(clamp_unit(s.position_km.z / rs));
            // Both points placed on the same meridian.
            const double dx = rs * std::cos(lat_s) - rt * std::cos(lat_t);
            const double dz = rs * std::sin(lat_s) - rt * std::sin(lat_t);
            best = std::min(best, std::hypot(dx, dz));
        }
        return best;
    }

    double earth_limb_bla_deg(double sat_altitude_km)
    {
        return rad_to_deg(std::asin(kEarthRadiusKm / (kEarthRadiusKm + sat_altitude_km)));
    }

    double elevation_from_bla(double bla_deg, double sat_altitude_km)
    {
        if (!(sat_altitude_km > 0.0))
            throw std::invalid_argument("satellite altitude must be positive");
        if (bla_deg < 0.0 || bla_deg >= earth_limb_bla_deg(sat_altitude_km))
            throw std::domain_error("beam look angle " + std::to_string(bla_deg) + " deg misses the Earth");
        const double c = (kEarthRadiusKm + sat_altitude_km) / kEarthRadiusKm * std::sin(deg_to_rad(bla_deg));
        return rad_to_deg(std::acos(clamp_unit(c)));
    }

    double altitude_for_elevation(double bla_deg, double elevation_deg)
    {
        if (!(bla_deg > 0.0 && bla_deg < 90.0) || !(elevation_deg >= 0.0 && elevation_deg < 90.0))
            throw std::invalid_argument("altitude_for_elevation needs 0 < bla < 90 and 0 <= elevation < 90");
        return kEarthRadiusKm * (std::cos(deg_to_rad(elevation_deg)) / std::sin(deg_to_rad(bla_deg)) - 1.0);
    }

    SatelliteState satellite_on_ascending_pass(const GeodeticPosition &position, double inclination_deg)
    {
        SatelliteState sat;
        sat.geodetic = position;
        sat.position_km = to_ecef(position);
        const EnuBasis enu = enu_basis(position.longitude_deg, position.latitude_deg);
        const double r = sat.position_km.norm();
        const double v = std::sqrt(constants::kEarthMuKm3S2 / r);
        const double cos_lat = std::cos(deg_to_rad(position.latitude_deg));
        // Inertial heading from north on the ascending branch: sin(Az) = cos(i) / cos(lat)
        const double sin_az = clamp_unit(std::cos(deg_to_rad(inclination_deg)) / cos_lat);
        const double cos_az = std::sqrt(1.0 - sin_az * sin_az);
        const double v_east = v * sin_az - constants::kEarthRotationRadS * r * cos_lat;
        const double v_north = v * cos_az;
        sat.velocity_kms = enu.east * v_east + enu.north * v_north;
        return sat;
    }

    Vec3 boresight_direction(const SatelliteState &sat, const BeamPointing &pointing)
    {
        const Vec3 up = sat.position_km.normalized();
        // Horizontal track direction and its right-hand cross-track companion.
        const Vec3 v = sat.velocity_kms;
        const Vec3 along = (v - up * v.dot(up)).normalized();
        const Vec3 right = along.cross(up);
        const double az = deg_to_rad(pointing.azimuth_deg), bla = deg_to_rad(pointing.bla_deg);
        const Vec3 horizontal = along * std::cos(az) + right * std::sin(az);
        return (-up * std::cos(bla) + horizontal * std::sin(bla)).normalized();
    }

    GeodeticPosition footprint_center(const SatelliteState &sat, const BeamPointing &pointing)
    {
        const Vec3 d = boresight_direction(sat, pointing);
        const Vec3 &p = sat.position_km;
        // |p + s d| = R, smallest positive s.
        const double b = p.dot(d);
        const double c = p.dot(p) - kEarthRadiusKm * kEarthRadiusKm;
        const double disc = b * b - c;
        if (disc < 0.0 || b >= 0.0)
            throw std::domain_error("SAR boresight does not intersect the Earth");
        const double s = -b - std::sqrt(disc);
        GeodeticPosition g = to_geodetic(p + d * s);
        g.altitude_km = 0.0;
        return g;
    }

    LookAngles slant_range_and_look(const Vec3 &ground, const EnuBasis &enu, const Vec3 &sat)
    {
        const Vec3 d = sat - ground;
        const double range = d.norm();
        if (!(range > 1e-9))
            throw std::invalid_argument("ground station and satellite positions coincide");
        const double e = d.dot(enu.east), n = d.dot(enu.north), u = d.dot(enu.up);
        return {range, rad_to_deg(std::asin(clamp_unit(u / range))), rad_to_deg(std::atan2(e, n))};
    }

    LookAngles slant_range_and_look(const GeodeticPosition &ground, const SatelliteState &sat)
    {
        return slant_range_and_look(to_ecef(ground), enu_basis(ground.longitude_deg, ground.latitude_deg), sat.position_km);
    }

    LocalDirection gcs_to_lcs(double gcs_elevation_deg, double gcs_azimuth_deg, const PanelOrientation &panel)
    {
        const double el = deg_to_rad(gcs_elevation_deg);
        const double az = deg_to_rad(gcs_azimuth_deg - panel.bearing_deg);
        const double t = deg_to_rad(panel.mech_downtilt_deg);
        // Azimuth rotation first, then the tilt about the panel's horizontal axis.
        const double x = std::cos(el) * std::cos(az), y = std::cos(el) * std::sin(az), z = std::sin(el);
        const double xl = x * std::cos(t) - z * std::sin(t);
        const double zl = x * std::sin(t) + z * std::cos(t);
        return {rad_to_deg(std::acos(clamp_unit(zl))), rad_to_deg(std::atan2(y, xl))};
    }

    GcsDirection lcs_to_gcs(const LocalDirection &dir, const PanelOrientation &panel)
    {
        const double th = deg_to_rad(dir.theta_deg), ph = deg_to_rad(dir.phi_deg);
        const double t = deg_to_rad(panel.mech_downtilt_deg);
        const double xl = std::sin(th) * std::cos(ph), y = std::sin(th) * std::sin(ph), zl = std::cos(th);
        const double x = xl * std::cos(t) + zl * std::sin(t);
        const double z = -xl * std::sin(t) + zl * std::cos(t);
        return {rad_to_deg(std::asin(clamp_unit(z))), wrap_deg_180(rad_to_deg(std::atan2(y, x)) + panel.bearing_deg)};
    }

    GeodeticPosition offset_position(const GeodeticPosition &origin, double east_km, double north_km)
    {
        const double dist = std::hypot(east_km, north_km);
        if (dist == 0.0)
            return origin;
        const double delta = dist / kEarthRadiusKm;
        const double brg = std::atan2(east_km, north_km);
        const double lat1 = deg_to_rad(origin.latitude_deg), lon1 = deg_to_rad(origin.longitude_deg);
        const double lat2 = std::asin(clamp_unit(std::sin(lat1) * std::cos(delta) + std::cos(lat1) * std::sin(delta) * std::cos(brg)));
        const double lon2 = lon1 + std::atan2(std::sin(brg) * std::sin(delta) * std::cos(lat1),
                                              std::cos(delta) - std::sin(lat1) * std::sin(lat2));
        return {wrap_deg_180(rad_to_deg(lon2)), rad_to_deg(lat2), origin.altitude_km};
    }

    double great_circle_distance_km(const GeodeticPosition &a, const GeodeticPosition &b)
    {
        const double la = deg_to_rad(a.latitude_deg), lb = deg_to_rad(b.latitude_deg);
        const double dl = deg_to_rad(b.longitude_deg - a.longitude_deg);
        const double h = std::pow(std::sin((lb - la) / 2.0), 2) + std::cos(la) * std::cos(lb) * std::pow(std::sin(dl / 2.0), 2);
        return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
    }
}
