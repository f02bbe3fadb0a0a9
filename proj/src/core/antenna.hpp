#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/geometry.hpp"

namespace ncrsim {

using cpx = std::complex<double>;

/// 3GPP 3D element pattern: 8 dBi peak, 65 deg 3 dB beamwidths in both
/// cuts, 30 dB front-to-back. Angles are offsets from the element
/// boresight. UE antennas are omnidirectional at 0 dBi.
double element_gain_db(double az_off_deg, double el_off_deg);

struct ElementPattern {
    double max_gain_dbi = 8.0;
    bool omni = false;

    double gain_db(double az_off_deg, double el_off_deg) const {
        if (omni) return 0.0;
        return max_gain_dbi - 8.0 + element_gain_db(az_off_deg, el_off_deg);
    }
};

inline constexpr ElementPattern kThreeGpp3dPattern{8.0, false};
inline constexpr ElementPattern kOmniPattern{0.0, true};

/// Uniform rectangular array. Elements sit in the panel plane on a
/// half-wavelength grid; the boresight is the plane normal.
struct UraPanel {
    int rows = 8;
    int cols = 8;
    double spacing_wl = 0.5;
    PanelSpec boresight;                       // mounting direction (az, el)
    ElementPattern pattern = kThreeGpp3dPattern;

    int size() const { return rows * cols; }
};

/// Direction of arrival/departure expressed in the panel frame.
struct LocalDirection {
    double az_deg = 0.0; // offset from boresight in the panel's horizontal cut
    double el_deg = 0.0; // offset in the vertical cut
    double u = 0.0;      // cos(el)*sin(az), phase coordinate along columns
    double v = 0.0;      // sin(el), phase coordinate along rows
    bool front = true;   // direction is in the panel's front half-space
};

LocalDirection to_panel_frame(const UraPanel& panel, const Vec3& from, const Vec3& to);

/// Unit-norm array response for a global direction (az, el); boresight
/// gives equal phases of magnitude 1/sqrt(rows*cols).
std::vector<cpx> steering_vector(const UraPanel& panel, double az_deg, double el_deg);

/// Unnormalized panel response toward a point: per-element phases scaled by
/// the square root of the (linear) element gain at the link direction.
/// |v^H f|^2 with a matched unit-norm beam f equals N * element_gain.
std::vector<cpx> panel_response(const UraPanel& panel, const Vec3& panel_pos, const Vec3& peer_pos);

struct Beam {
    int index = 0;
    std::vector<cpx> weights; // unit norm
    double az_deg = 0.0;      // pointing, panel frame
    double el_deg = 0.0;
};

// Default codebook sector half-widths. The azimuth sector spans the street
// in front of a panel; elevation covers street-level users and the slight
// uptilt of backhaul links.
inline constexpr double kSectorAzHalfDeg = 60.0;
inline constexpr double kSectorElHalfDeg = 22.0;
inline constexpr int kDefaultBeamsAz = 12;
inline constexpr int kDefaultBeamsEl = 5;

struct Codebook {
    std::vector<Beam> beams;
    int n_az = 0;
    int n_el = 0;
};

/// DFT-grid codebook: n_az x n_el beams on a uniform sin-space grid over
/// the panel sector (az +-60 deg, el +-22 deg around boresight).
Codebook build_codebook(const UraPanel& panel, int n_az = kDefaultBeamsAz,
                        int n_el = kDefaultBeamsEl);

/// Per-beam projections |v^H f_b| of a panel response onto a codebook.
std::vector<cpx> beam_projections(const Codebook& cb, std::span<const cpx> response);

/// Minimal dense complex matrix for the generic channel interface.
struct CMat {
    int rows = 0;
    int cols = 0;
    std::vector<cpx> a; // row major

    cpx& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const cpx& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// gamma = d * H * f: the combined channel coefficient after transmit
/// filter f (cols x 1) and receive filter d (1 x rows).
/// Throws std::invalid_argument on dimension mismatch.
cpx combined_gain(std::span<const cpx> rx_filter, const CMat& h, std::span<const cpx> tx_filter);

} // namespace ncrsim
