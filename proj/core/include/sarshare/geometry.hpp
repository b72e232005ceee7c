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

#ifndef SARSHARE_GEOMETRY_HPP
#define SARSHARE_GEOMETRY_HPP

#include "sarshare/units.hpp"

namespace sarshare
{
    // Spherical Earth throughout; altitude is height above the sphere of radius kEarthRadiusKm.
    struct GeodeticPosition
    {
        double longitude_deg = 0.0;
        double latitude_deg = 0.0;
        double altitude_km = 0.0;
    };

    enum class AngleUnit
    {
        degrees,
        radians
    };

    struct KeplerianElements
    {
        double periapsis_altitude_km = 0.0;
        double eccentricity = 0.0;
        double inclination_deg = 0.0;
        double raan_deg = 0.0;
        double true_anomaly_deg = 0.0; // at epoch (t = 0)
        double arg_periapsis_deg = 0.0;

        double semi_major_axis_km() const;
        double apoapsis_altitude_km() const;
        double period_s() const;
        void validate() const; // throws std::invalid_argument

        // The SAR-F6 study orbit. The argument of perigee is tabulated as 180.9383 with a
        // "radians" label; `arg_unit` selects how that number is read.
        static KeplerianElements sar_study_orbit(AngleUnit arg_unit = AngleUnit::degrees);
    };

    struct InertialState
    {
        Vec3 position_km;
        Vec3 velocity_kms;
    };

    struct SatelliteState
    {
        Vec3 position_km;   // Earth-fixed
        Vec3 velocity_kms;  // Earth-fixed (relative to the rotating Earth)
        GeodeticPosition geodetic;
    };

    // Beam direction of the SAR antenna: off-nadir look angle and azimuth in the track frame
    // (0 = along track, 90 = cross-track to the right of the velocity vector).
    struct BeamPointing
    {
        double bla_deg = 50.0;
        double azimuth_deg = 90.0;
    };

    // Bearing is the compass azimuth of the panel boresight; positive downtilt points it below
    // the horizon.
    struct PanelOrientation
    {
        double bearing_deg = 0.0;
        double mech_downtilt_deg = 10.0;
    };

    // Panel-local angles: theta is the zenith angle (90 = panel boresight plane), phi the
    // azimuth from boresight, positive in the same rotational sense as compass azimuth.
    struct LocalDirection
    {
        double theta_deg = 90.0;
        double phi_deg = 0.0;
    };

    struct GcsDirection
    {
        double elevation_deg = 0.0;
        double azimuth_deg = 0.0;
    };

    struct LookAngles
    {
        double range_km = 0.0;
        double elevation_deg = 0.0;
        double azimuth_deg = 0.0; // compass, clockwise from north
    };

    Vec3 to_ecef(const GeodeticPosition &pos);
    GeodeticPosition to_geodetic(const Vec3 &ecef_km);

    struct EnuBasis
    {
        Vec3 east, north, up;
    };
    EnuBasis enu_basis(double longitude_deg, double latitude_deg);

    // Two-body propagation from the epoch state defined by the elements.
    InertialState propagate_inertial(const KeplerianElements &elements, double t_seconds);

    // Earth-fixed state; the inertial and Earth-fixed frames are taken aligned at t = 0.
    SatelliteState propagate_orbit(const KeplerianElements &elements, double t_seconds);

    double specific_orbital_energy(const InertialState &state);
    double time_to_periapsis_s(const KeplerianElements &elements);
    double time_to_apoapsis_s(const KeplerianElements &elements);

    // Smallest distance between `target` and the orbit when the unknown epoch is absorbed into
    // the Earth rotation phase (only latitude and radius are compared), sampled every `step_s`.
    double orbit_miss_distance_km(const KeplerianElements &elements, const GeodeticPosition &target,
                                  double step_s = 1.0);

    // Elevation of the boresight seen from its footprint center; cos(alpha) = (R+h)/R sin(beta).
    double elevation_from_bla(double bla_deg, double sat_altitude_km);
    // Inverse of elevation_from_bla with respect to the altitude.
    double altitude_for_elevation(double bla_deg, double elevation_deg);
    // Off-nadir angle at which the boresight grazes the Earth limb.
    double earth_limb_bla_deg(double sat_altitude_km);

    // Satellite state over `subsatellite` (altitude in the position) on an ascending pass of a
    // circular orbit with the given inclination. Velocity is Earth-relative.
    SatelliteState satellite_on_ascending_pass(const GeodeticPosition &position, double inclination_deg);

    Vec3 boresight_direction(const SatelliteState &sat, const BeamPointing &pointing);
    GeodeticPosition footprint_center(const SatelliteState &sat, const BeamPointing &pointing);

    LookAngles slant_range_and_look(const GeodeticPosition &ground, const SatelliteState &sat);
    LookAngles slant_range_and_look(const Vec3 &ground_ecef, const EnuBasis &ground_enu, const Vec3 &sat_ecef);

    LocalDirection gcs_to_lcs(double gcs_elevation_deg, double gcs_azimuth_deg, const PanelOrientation &panel);
    GcsDirection lcs_to_gcs(const LocalDirection &dir, const PanelOrientation &panel);

    // Point reached from `origin` by moving `east_km`/`north_km` in an azimuthal-equidistant
    // tangent plane; altitude is copied from `origin`.
    GeodeticPosition offset_position(const GeodeticPosition &origin, double east_km, double north_km);
    double great_circle_distance_km(const GeodeticPosition &a, const GeodeticPosition &b);
}

#endif
