#include "core/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncrsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kRadToDeg = 180.0 / kPi;

} // namespace

double element_gain_db(double az_off_deg, double el_off_deg) {
    // TR 38.901 section 7.3 element pattern, 65 deg 3 dB beamwidth per cut,
    // 30 dB side-lobe floor and front-to-back ratio, 8 dBi peak.
    const double a_v = -std::min(12.0 * std::pow(el_off_deg / 65.0, 2.0), 30.0);
    const double a_h = -std::min(12.0 * std::pow(az_off_deg / 65.0, 2.0), 30.0);
    const double a = -std::min(-(a_v + a_h), 30.0);
    return 8.0 + a;
}

LocalDirection to_panel_frame(const UraPanel& panel, const Vec3& from, const Vec3& to) {
    Vec3 w = to - from;
    const double n = norm(w);
    if (n < 1e-12) {
        return {};
    }
    w = w * (1.0 / n);
    const double az = panel.boresight.az_deg * kDegToRad;
    const double el = panel.boresight.el_deg * kDegToRad;
    const Vec3 ex{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
    const Vec3 ey{-std::sin(az), std::cos(az), 0.0};
    const Vec3 ez{-std::sin(el) * std::cos(az), -std::sin(el) * std::sin(az), std::cos(el)};
    LocalDirection d;
    const double wx = dot(w, ex);
    d.u = dot(w, ey);
    d.v = std::clamp(dot(w, ez), -1.0, 1.0);
    d.az_deg = std::atan2(d.u, wx) * kRadToDeg;
    d.el_deg = std::asin(d.v) * kRadToDeg;
    d.front = wx > 0.0;
    return d;
}

namespace {

std::vector<cpx> phased_vector(const UraPanel& panel, double u, double v, double amplitude) {
    std::vector<cpx> out(static_cast<size_t>(panel.size()));
    const double k = 2.0 * kPi * panel.spacing_wl;
    for (int m = 0; m < panel.rows; ++m) {
        for (int n = 0; n < panel.cols; ++n) {
            const double phase = k * (n * u + m * v);
            out[static_cast<size_t>(m) * panel.cols + n] =
                std::polar(amplitude, phase);
        }
    }
    return out;
}

} // namespace

std::vector<cpx> steering_vector(const UraPanel& panel, double az_deg, double el_deg) {
    // Angles are relative to the panel boresight.
    const double el = el_deg * kDegToRad;
    const double u = std::cos(el) * std::sin(az_deg * kDegToRad);
    const double v = std::sin(el);
    return phased_vector(panel, u, v, 1.0 / std::sqrt(static_cast<double>(panel.size())));
}

std::vector<cpx> panel_response(const UraPanel& panel, const Vec3& panel_pos, const Vec3& peer_pos) {
    const LocalDirection d = to_panel_frame(panel, panel_pos, peer_pos);
    const double g_lin = std::pow(10.0, panel.pattern.gain_db(d.az_deg, d.el_deg) / 10.0);
    return phased_vector(panel, d.u, d.v, std::sqrt(g_lin));
}

Codebook build_codebook(const UraPanel& panel, int n_az, int n_el) {
    if (n_az < 1 || n_el < 1) {
        throw std::invalid_argument("codebook needs at least one beam per axis");
    }
    Codebook cb;
    cb.n_az = n_az;
    cb.n_el = n_el;
    const double umax = std::sin(kSectorAzHalfDeg * kDegToRad);
    const double vmax = std::sin(kSectorElHalfDeg * kDegToRad);
    const double du = 2.0 * umax / n_az;
    const double dv = 2.0 * vmax / n_el;
    const double amp = 1.0 / std::sqrt(static_cast<double>(panel.size()));
    int index = 0;
    for (int j = 0; j < n_el; ++j) {
        const double v = -vmax + (j + 0.5) * dv;
        for (int i = 0; i < n_az; ++i, ++index) {
            const double u = -umax + (i + 0.5) * du;
            Beam b;
            b.index = index;
            b.el_deg = std::asin(v) * kRadToDeg;
            b.az_deg = std::asin(std::clamp(u / std::cos(b.el_deg * kDegToRad), -1.0, 1.0)) *
                       kRadToDeg;
            b.weights = phased_vector(panel, u, v, amp);
            cb.beams.push_back(std::move(b));
        }
    }
    return cb;
}

std::vector<cpx> beam_projections(const Codebook& cb, std::span<const cpx> response) {
    std::vector<cpx> proj(cb.beams.size());
    for (size_t b = 0; b < cb.beams.size(); ++b) {
        cpx acc{0.0, 0.0};
        const auto& w = cb.beams[b].weights;
        for (size_t i = 0; i < w.size(); ++i) {
            acc += std::conj(response[i]) * w[i];
        }
        proj[b] = acc;
    }
    return proj;
}

cpx combined_gain(std::span<const cpx> rx_filter, const CMat& h, std::span<const cpx> tx_filter) {
    if (static_cast<int>(rx_filter.size()) != h.rows ||
        static_cast<int>(tx_filter.size()) != h.cols) {
        throw std::invalid_argument("combined_gain: filter/channel dimension mismatch");
    }
    cpx acc{0.0, 0.0};
    for (int r = 0; r < h.rows; ++r) {
        cpx row{0.0, 0.0};
        for (int c = 0; c < h.cols; ++c) {
            row += h.at(r, c) * tx_filter[static_cast<size_t>(c)];
        }
        acc += rx_filter[static_cast<size_t>(r)] * row;
    }
    return acc;
}

} // namespace ncrsim
