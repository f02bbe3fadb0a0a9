#include "core/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ncrsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

double path_loss_umi_db(double distance_3d_m, double fc_ghz, bool los, double h_bs_m,
                        double h_ut_m) {
    if (distance_3d_m < 1.0) {
        throw std::invalid_argument("path loss model invalid below 1 m");
    }
    // Breakpoint distance with 1 m effective environment height.
    const double h_bs_eff = h_bs_m - 1.0;
    const double h_ut_eff = h_ut_m - 1.0;
    const double d_bp = 4.0 * h_bs_eff * h_ut_eff * fc_ghz * 1e9 / kSpeedOfLight;
    const double dh = h_bs_m - h_ut_m;

    double pl_los;
    if (distance_3d_m <= d_bp) {
        pl_los = 32.4 + 21.0 * std::log10(distance_3d_m) + 20.0 * std::log10(fc_ghz);
    } else {
        pl_los = 32.4 + 40.0 * std::log10(distance_3d_m) + 20.0 * std::log10(fc_ghz) -
                 9.5 * std::log10(d_bp * d_bp + dh * dh);
    }
    if (los) {
        return pl_los;
    }
    const double pl_nlos = 22.4 + 35.3 * std::log10(distance_3d_m) + 21.3 * std::log10(fc_ghz) -
                           0.3 * (h_ut_m - 1.5);
    return std::max(pl_los, pl_nlos);
}

ShadowProcess::ShadowProcess(uint64_t seed, double corr_distance_m)
    : stream_(seed), corr_m_(corr_distance_m) {
    x_ = stream_.normal();
}

void ShadowProcess::advance(double delta_m) {
    if (delta_m <= 0.0) {
        return;
    }
    const double rho = std::exp(-delta_m / corr_m_);
    x_ = rho * x_ + std::sqrt(1.0 - rho * rho) * stream_.normal();
}

double ShadowProcess::sample_db(bool los) const {
    return x_ * (los ? kShadowSigmaLosDb : kShadowSigmaNlosDb);
}

FadingProcess::FadingProcess(uint64_t seed, int n_rb, double doppler_hz, double slot_duration_s,
                             double delay_spread_ns, double rb_bandwidth_hz)
    : w_(static_cast<size_t>(n_rb)), stream_(seed) {
    const double x = 2.0 * kPi * doppler_hz * slot_duration_s;
    rho_slot_ = doppler_hz <= 0.0 ? 1.0 : std::cyl_bessel_j(0.0, x);
    // Magnitude of the exponential-PDP frequency correlation at RB spacing.
    const double y = 2.0 * kPi * rb_bandwidth_hz * delay_spread_ns * 1e-9;
    rho_f_ = 1.0 / std::sqrt(1.0 + y * y);
    los_phase_ = std::polar(1.0, 2.0 * kPi * stream_.uniform());
}

void FadingProcess::draw_innovation(std::vector<cpx>& u) {
    const double s = std::sqrt(0.5);
    const double mix = std::sqrt(1.0 - rho_f_ * rho_f_);
    cpx prev{0.0, 0.0};
    for (size_t k = 0; k < u.size(); ++k) {
        const cpx fresh{stream_.normal() * s, stream_.normal() * s};
        u[k] = k == 0 ? fresh : cpx{rho_f_ * prev + mix * fresh};
        prev = u[k];
    }
}

void FadingProcess::advance_to(uint64_t slot) {
    if (!initialized_) {
        draw_innovation(w_);
        last_slot_ = slot;
        initialized_ = true;
        return;
    }
    if (slot <= last_slot_ || rho_slot_ >= 1.0) {
        last_slot_ = std::max(last_slot_, slot);
        return;
    }
    const double a = std::pow(rho_slot_, static_cast<double>(slot - last_slot_));
    const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
    std::vector<cpx> u(w_.size());
    draw_innovation(u);
    for (size_t k = 0; k < w_.size(); ++k) {
        w_[k] = a * w_[k] + b * u[k];
    }
    last_slot_ = slot;
}

cpx FadingProcess::sample(int rb, double k_factor_lin) const {
    const double k = k_factor_lin;
    return std::sqrt(k / (k + 1.0)) * los_phase_ +
           std::sqrt(1.0 / (k + 1.0)) * w_[static_cast<size_t>(rb)];
}

ChannelLink::ChannelLink(uint32_t a, uint32_t b, uint64_t seed, int n_rb, double doppler_hz,
                         double slot_duration_s, double delay_spread_ns, double rb_bandwidth_hz,
                         double shadow_corr_m)
    : node_a(a),
      node_b(b),
      shadow(derive_seed(seed, "shadow", a, b), shadow_corr_m),
      fading(derive_seed(seed, "fading", a, b), n_rb, doppler_hz, slot_duration_s,
             delay_spread_ns, rb_bandwidth_hz) {}

void ChannelLink::update(uint64_t slot, const Vec3& pos_a, const Vec3& pos_b,
                         const MadridGrid& grid, double fc_ghz, double mobile_speed_mps,
                         double slot_duration_s, bool force_los) {
    if (state_slot == slot) {
        return;
    }
    const uint64_t elapsed =
        state_slot == std::numeric_limits<uint64_t>::max() ? 0 : slot - state_slot;
    shadow.advance(mobile_speed_mps * slot_duration_s * static_cast<double>(elapsed));
    los = force_los || !los_blocked(pos_a, pos_b, grid);
    distance_3d = norm(pos_a - pos_b);
    const double h_hi = std::max(pos_a.z, pos_b.z);
    const double h_lo = std::min(pos_a.z, pos_b.z);
    path_loss_db = path_loss_umi_db(distance_3d, fc_ghz, los, h_hi, h_lo);
    shadowing_db = shadow.sample_db(los);
    amp2 = db_to_lin(-(path_loss_db + shadowing_db));
    fading.advance_to(slot);
    state_slot = slot;
}

CMat channel_matrix(std::span<const cpx> v_rx, std::span<const cpx> v_tx, cpx scalar) {
    CMat h;
    h.rows = static_cast<int>(v_rx.size());
    h.cols = static_cast<int>(v_tx.size());
    h.a.resize(v_rx.size() * v_tx.size());
    for (int r = 0; r < h.rows; ++r) {
        for (int c = 0; c < h.cols; ++c) {
            h.at(r, c) = scalar * v_rx[static_cast<size_t>(r)] *
                         std::conj(v_tx[static_cast<size_t>(c)]);
        }
    }
    return h;
}

double noise_per_rb_dbm(double rb_bandwidth_hz, double noise_figure_db) {
    return -174.0 + 10.0 * std::log10(rb_bandwidth_hz) + noise_figure_db;
}

} // namespace ncrsim
