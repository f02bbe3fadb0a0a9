#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "core/antenna.hpp"
#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace ncrsim {

// Shadowing standard deviations for UMi street canyon.
inline constexpr double kShadowSigmaLosDb = 4.0;
inline constexpr double kShadowSigmaNlosDb = 7.82;
inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kRbBandwidthHz = 12.0 * 60e3;

/// TR 38.901 UMi street-canyon path loss in dB. NLOS applies the
/// max(LOS, NLOS') rule. Distances below 1 m are rejected.
double path_loss_umi_db(double distance_3d_m, double fc_ghz, bool los, double h_bs_m,
                        double h_ut_m);

/// Lognormal shadowing (in dB) with exponential spatial autocorrelation
/// along the mobile end's trajectory.
class ShadowProcess {
  public:
    ShadowProcess(uint64_t seed, double corr_distance_m);

    /// Evolves the process after the mobile end moved by `delta_m` meters.
    void advance(double delta_m);
    double sample_db(bool los) const;
    double normalized() const { return x_; }

  private:
    RngStream stream_;
    double x_; // unit-variance state
    double corr_m_;
};

/// Small-scale fading for one link: Rician (LOS) / Rayleigh (NLOS) with
/// AR(1) Doppler correlation across slots and AR(1) correlation across
/// resource blocks. The diffuse state advances lazily; jumps over N slots
/// are statistically exact for the Gauss-Markov process.
class FadingProcess {
  public:
    FadingProcess(uint64_t seed, int n_rb, double doppler_hz, double slot_duration_s,
                  double delay_spread_ns, double rb_bandwidth_hz);

    void advance_to(uint64_t slot);
    /// Complex coefficient at `rb` for the current slot; E[|h|^2] = 1.
    cpx sample(int rb, double k_factor_lin) const;

    double slot_correlation() const { return rho_slot_; }
    double rb_correlation() const { return rho_f_; }

  private:
    void draw_innovation(std::vector<cpx>& u);

    std::vector<cpx> w_; // diffuse component per RB, unit power
    RngStream stream_;
    double rho_slot_;
    double rho_f_;
    cpx los_phase_;
    uint64_t last_slot_ = 0;
    bool initialized_ = false;
};

/// Per node-pair channel state. Stored once per unordered pair; the uplink
/// matrix is the transpose of the downlink one (TDD reciprocity).
struct ChannelLink {
    uint32_t node_a = 0;
    uint32_t node_b = 0;
    ShadowProcess shadow;
    FadingProcess fading;

    bool los = false;
    double distance_3d = 0.0;
    double path_loss_db = 0.0;
    double shadowing_db = 0.0;
    double amp2 = 0.0; // 10^(-(PL+SF)/10), large-scale linear power gain
    uint64_t state_slot = std::numeric_limits<uint64_t>::max();

    ChannelLink(uint32_t a, uint32_t b, uint64_t seed, int n_rb, double doppler_hz,
                double slot_duration_s, double delay_spread_ns, double rb_bandwidth_hz,
                double shadow_corr_m);

    /// Recomputes LOS, path loss and shadowing for the given endpoint
    /// positions and advances the fading state to `slot`. Planned links
    /// (gNB-repeater backhaul) carry `force_los`, overriding the geometric
    /// blockage test.
    void update(uint64_t slot, const Vec3& pos_a, const Vec3& pos_b, const MadridGrid& grid,
                double fc_ghz, double mobile_speed_mps, double slot_duration_s,
                bool force_los = false);
};

/// Full channel matrix H = scalar * v_rx * v_tx^H from the panel responses
/// at both ends; `scalar` carries the large-scale amplitude and the fading
/// coefficient.
CMat channel_matrix(std::span<const cpx> v_rx, std::span<const cpx> v_tx, cpx scalar);

/// Thermal noise power per RB in dBm: -174 dBm/Hz + 10log10(B_rb) + NF.
double noise_per_rb_dbm(double rb_bandwidth_hz, double noise_figure_db);

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace ncrsim
