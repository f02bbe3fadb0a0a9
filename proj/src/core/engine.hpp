#pragma once

#include <array>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "core/antenna.hpp"
#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/geometry.hpp"
#include "core/linkmgmt.hpp"
#include "core/mac.hpp"
#include "core/metrics.hpp"
#include "core/ncr.hpp"
#include "core/phy.hpp"

namespace ncrsim {

struct RunCounters {
    std::array<uint64_t, 2> transmissions{};  // indexed by Direction
    std::array<uint64_t, 2> crc_errors{};
    std::array<uint64_t, 2> scheduled_rbs{};
    std::vector<std::array<uint64_t, 2>> rb_per_ue;
    uint64_t work_conservation_violations = 0;
};

struct RunResult {
    std::string scenario;
    uint64_t seed = 0;
    std::vector<SinrSample> samples;
    RunCounters counters;
};

/// One deterministic (scenario, seed) simulation: slot loop with TDD,
/// CBR traffic, longest-wait round robin, beam sweeps, amplify-and-forward
/// repeaters, SINR evaluation and outer-loop link adaptation.
class SimEngine {
  public:
    SimEngine(const SimConfig& cfg, const std::string& scenario, uint64_t seed);

    RunResult run();

    // Stepwise access for tests.
    void run_slot(uint64_t slot);
    void finish();
    const RunResult& result() const { return result_; }

    const MadridGrid& grid() const { return grid_; }
    const NetworkNode& gnb() const { return gnb_; }
    const std::vector<NcrNode>& ncrs() const { return ncrs_; }
    const std::vector<NetworkNode>& ues() const { return ues_; }
    const std::vector<Association>& associations() const { return assoc_; }

    void sweep_backhaul(uint64_t slot);
    std::vector<MeasurementReport> sweep_access(uint64_t slot);

  private:
    struct PathScalars {
        size_t ncr = 0;
        size_t panel = 0;
        double access_gain2 = 0.0;   // repeater <-> UE, current access beam
        double backhaul_gain2 = 0.0; // repeater <-> gNB, pair beam x RB beam
    };

    void touch_links_for_slot(uint64_t slot, const std::vector<uint32_t>& scheduled_ues);
    void set_side_control(uint64_t slot, const SlotSchedule& sched,
                          const std::vector<int>& rb_ue);
    double link_gain2(const ChannelLink& link, int rb, double beam_gain2, double k_lin) const;
    std::vector<PathScalars> forwarded_paths(size_t ue_index, int rb, int gnb_beam,
                                             uint64_t slot);
    SinrBreakdown evaluate_rb(size_t ue_index, int rb, int gnb_beam, double p_lin,
                              Direction dir, uint64_t slot);

    double nominal_dl_gain(size_t ncr_index, uint64_t slot);
    void init_la_if_new(size_t ue_index, const Association& a);

    SimConfig cfg_;
    std::string scenario_name_;
    uint64_t seed_;

    MadridGrid grid_;
    NetworkNode gnb_;
    UraPanel gnb_panel_;
    std::vector<NcrNode> ncrs_;
    std::vector<NetworkNode> ues_;
    std::unique_ptr<MobilityState> mobility_;
    Codebook codebook_; // shared beam grid (panel-local coordinates)
    BlerTable bler_;

    double sigma2_dbm_ = 0.0;
    double sigma2_lin_ = 0.0;
    double k_factor_lin_ = 10.0;
    SweepSchedule sweeps_;

    // Channel state per link class.
    std::vector<ChannelLink> gnb_ue_;              // [ue]
    std::vector<ChannelLink> gnb_ncr_;             // [ncr]
    std::vector<std::vector<ChannelLink>> ncr_ue_; // [ncr][ue]

    // Beam projections cached at sweep instants.
    std::vector<std::vector<cpx>> proj_gnb_ue_;                     // [ue][beam]
    std::vector<std::vector<cpx>> proj_gnb_ncr_gside_;              // [ncr][beam]
    std::vector<std::vector<cpx>> proj_gnb_ncr_nside_;              // [ncr][beam]
    std::vector<std::vector<std::vector<cpx>>> proj_ncr_ue_;        // [ncr][panel*nue+ue][beam]

    std::vector<Association> assoc_;            // [ue]
    std::vector<bool> has_assoc_;               // [ue]
    std::vector<LinkAdaptationState> la_;       // [ue*2 + dir]
    std::vector<Bearer> bearers_;               // [ue*2 + dir]
    std::vector<CbrSource> sources_;
    std::vector<int> bearer_mcs_;               // chosen at scheduling time

    RunResult result_;
    std::ofstream assoc_trace_;
    std::ofstream channel_trace_;
};

/// Convenience wrapper: validates nothing, runs one scenario/seed.
RunResult run_simulation(const SimConfig& cfg, const std::string& scenario, uint64_t seed);

} // namespace ncrsim
