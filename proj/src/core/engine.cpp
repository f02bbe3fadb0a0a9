#include "core/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncrsim {

namespace {

double n2(const cpx& z) { return std::norm(z); }

} // namespace

SimEngine::SimEngine(const SimConfig& cfg, const std::string& scenario, uint64_t seed)
    : cfg_(cfg), scenario_name_(scenario), seed_(seed), grid_(build_grid()) {
    grid_.building_height = cfg_.building_height_m;

    Deployment dep;
    if (scenario == "custom") {
        std::vector<NcrPlacement> placements;
        const Deployment base = place_nodes(ScenarioId::S1, grid_);
        placements.reserve(cfg_.custom_ncrs.size());
        for (const CustomNcr& c : cfg_.custom_ncrs) {
            placements.push_back(resolve_custom_ncr(c, base.gnb.pos));
        }
        dep = make_deployment(grid_, placements);
    } else {
        ScenarioId id;
        if (!parse_scenario_id(scenario, id)) {
            throw std::invalid_argument("unknown scenario: " + scenario);
        }
        dep = place_nodes(id, grid_);
    }

    gnb_ = dep.gnb;
    gnb_panel_.boresight = {90.0, -12.0}; // facing the top street, 12 deg downtilt
    uint32_t next_ncr_id = kNcrIdBase;
    for (const NcrPlacement& p : dep.ncrs) {
        NcrNode n = make_ncr(next_ncr_id++, p, gnb_.id);
        n.forwarding = cfg_.ncr_forwarding;
        ncrs_.push_back(std::move(n));
    }

    ues_ = drop_ues(cfg_.num_ues, grid_, seed_);
    mobility_ = std::make_unique<MobilityState>(ues_, grid_, seed_);
    codebook_ = build_codebook(gnb_panel_);
    bler_ = cfg_.bler_curves_path.empty() ? BlerTable::builtin()
                                          : BlerTable::load_file(cfg_.bler_curves_path);

    sigma2_dbm_ = noise_per_rb_dbm(kRbBandwidthHz, cfg_.noise_figure_db);
    sigma2_lin_ = db_to_lin(sigma2_dbm_);
    k_factor_lin_ = db_to_lin(cfg_.rician_k_db);
    sweeps_ = {cfg_.t_backhaul_slots, cfg_.t_access_slots};

    const size_t nue = ues_.size();
    const double doppler = kUeSpeedMps * cfg_.carrier_ghz * 1e9 / kSpeedOfLight;
    gnb_ue_.reserve(nue);
    proj_gnb_ue_.resize(nue);
    for (const NetworkNode& ue : ues_) {
        gnb_ue_.emplace_back(gnb_.id, ue.id, seed_, kNumRb, doppler, kSlotDurationS,
                             cfg_.delay_spread_ns, kRbBandwidthHz, cfg_.shadow_corr_m);
    }
    for (const NcrNode& ncr : ncrs_) {
        gnb_ncr_.emplace_back(gnb_.id, ncr.node.id, seed_, kNumRb, 0.0, kSlotDurationS,
                              cfg_.delay_spread_ns, kRbBandwidthHz, cfg_.shadow_corr_m);
        std::vector<ChannelLink> links;
        links.reserve(nue);
        for (const NetworkNode& ue : ues_) {
            links.emplace_back(ncr.node.id, ue.id, seed_, kNumRb, doppler, kSlotDurationS,
                               cfg_.delay_spread_ns, kRbBandwidthHz, cfg_.shadow_corr_m);
        }
        ncr_ue_.push_back(std::move(links));
        proj_gnb_ncr_gside_.emplace_back();
        proj_gnb_ncr_nside_.emplace_back();
        proj_ncr_ue_.emplace_back(ncr.access_panels.size() * nue);
    }

    assoc_.resize(nue);
    has_assoc_.assign(nue, false);
    la_.resize(2 * nue);
    bearers_.reserve(2 * nue);
    for (const NetworkNode& ue : ues_) {
        bearers_.push_back({ue.id, Direction::Downlink, {}});
        bearers_.push_back({ue.id, Direction::Uplink, {}});
    }
    const double period =
        kCbrPacketBits / (cfg_.traffic_mbps * 1e6 * kSlotDurationS); // slots per packet
    for (const NetworkNode& ue : ues_) {
        sources_.push_back({ue.id, Direction::Downlink, period, kCbrPacketBits, 0.0});
        sources_.push_back({ue.id, Direction::Uplink, period, kCbrPacketBits, 0.0});
    }
    result_.scenario = scenario_name_;
    result_.seed = seed_;
    result_.counters.rb_per_ue.resize(nue);

    if (!cfg_.dump_assoc_csv.empty()) {
        assoc_trace_.open(cfg_.dump_assoc_csv);
        assoc_trace_ << "slot,ue,path,ncr,panel,gnb_beam,ncr_beam,rsrp_dbm\n";
    }
    if (!cfg_.dump_channel_csv.empty()) {
        channel_trace_.open(cfg_.dump_channel_csv);
        channel_trace_ << "slot,tx,rx,los,distance_m,path_loss_db,shadowing_db\n";
    }
}

void SimEngine::sweep_backhaul(uint64_t slot) {
    for (size_t r = 0; r < ncrs_.size(); ++r) {
        NcrNode& ncr = ncrs_[r];
        if (!ncr.forwarding) {
            continue;
        }
        gnb_ncr_[r].update(slot, gnb_.pos, ncr.node.pos, grid_, cfg_.carrier_ghz, 0.0,
                           kSlotDurationS, /*force_los=*/true);
        const auto v_g = panel_response(gnb_panel_, gnb_.pos, ncr.node.pos);
        const auto v_n = panel_response(ncr.backhaul_panel, ncr.node.pos, gnb_.pos);
        proj_gnb_ncr_gside_[r] = beam_projections(codebook_, v_g);
        proj_gnb_ncr_nside_[r] = beam_projections(codebook_, v_n);
        double best = -1.0;
        for (size_t f = 0; f < codebook_.beams.size(); ++f) {
            for (size_t d = 0; d < codebook_.beams.size(); ++d) {
                const double gain =
                    n2(proj_gnb_ncr_gside_[r][f]) * n2(proj_gnb_ncr_nside_[r][d]);
                if (gain > best) {
                    best = gain;
                    ncr.gnb_beam = static_cast<int>(f);
                    ncr.backhaul_beam = static_cast<int>(d);
                }
            }
        }
    }
}

double SimEngine::nominal_dl_gain(size_t ncr_index, uint64_t slot) {
    const NcrNode& ncr = ncrs_[ncr_index];
    if (!ncr.forwarding) {
        return 0.0;
    }
    const ChannelLink& bl = gnb_ncr_[ncr_index];
    const double p_rb = db_to_lin(gnb_.tx_power_dbm - 10.0 * std::log10(kNumRb));
    const double beam_gain =
        n2(proj_gnb_ncr_gside_[ncr_index][static_cast<size_t>(ncr.gnb_beam)]) *
        n2(proj_gnb_ncr_nside_[ncr_index][static_cast<size_t>(ncr.backhaul_beam)]);
    const double k_lin = bl.los ? k_factor_lin_ : 0.0;
    double signal = 0.0;
    for (int k = 0; k < kNumRb; ++k) {
        signal += p_rb * bl.amp2 * n2(bl.fading.sample(k, k_lin)) * beam_gain;
    }
    const double input_mw = signal + kNumRb * sigma2_lin_;
    (void)slot;
    return af_gain_lin(lin_to_db(input_mw), cfg_.ncr_gain_max_db, ncr.node.tx_power_dbm);
}

std::vector<MeasurementReport> SimEngine::sweep_access(uint64_t slot) {
    const size_t nue = ues_.size();
    const double p_ref = db_to_lin(gnb_.tx_power_dbm - 10.0 * std::log10(kNumRb));
    std::vector<MeasurementReport> reports(nue);

    for (size_t u = 0; u < nue; ++u) {
        ChannelLink& link = gnb_ue_[u];
        link.update(slot, gnb_.pos, mobility_->position(u), grid_, cfg_.carrier_ghz, kUeSpeedMps,
                    kSlotDurationS);
        const auto v = panel_response(gnb_panel_, gnb_.pos, mobility_->position(u));
        proj_gnb_ue_[u] = beam_projections(codebook_, v);
        const double k_lin = link.los ? k_factor_lin_ : 0.0;
        double mean_h2 = 0.0;
        for (int k = 0; k < kNumRb; ++k) {
            mean_h2 += n2(link.fading.sample(k, k_lin));
        }
        mean_h2 /= kNumRb;

        reports[u].ue = ues_[u].id;
        for (size_t f = 0; f < codebook_.beams.size(); ++f) {
            CandidateMeasurement c;
            c.kind = PathKind::Direct;
            c.gnb_beam = static_cast<int>(f);
            c.rsrp_dbm = lin_to_db(p_ref * link.amp2 * mean_h2 * n2(proj_gnb_ue_[u][f]));
            reports[u].candidates.push_back(c);
        }
        if (channel_trace_.is_open()) {
            channel_trace_ << slot << ',' << gnb_.id << ',' << ues_[u].id << ',' << link.los
                           << ',' << link.distance_3d << ',' << link.path_loss_db << ','
                           << link.shadowing_db << '\n';
        }
    }

    for (size_t r = 0; r < ncrs_.size(); ++r) {
        NcrNode& ncr = ncrs_[r];
        if (!ncr.forwarding) {
            continue;
        }
        ChannelLink& bl = gnb_ncr_[r];
        bl.update(slot, gnb_.pos, ncr.node.pos, grid_, cfg_.carrier_ghz, 0.0, kSlotDurationS,
                  /*force_los=*/true);
        const double g_nom = nominal_dl_gain(r, slot);
        if (g_nom <= 0.0) {
            continue;
        }
        const double bh_beam_gain =
            n2(proj_gnb_ncr_gside_[r][static_cast<size_t>(ncr.gnb_beam)]) *
            n2(proj_gnb_ncr_nside_[r][static_cast<size_t>(ncr.backhaul_beam)]);
        const double k_bl = bl.los ? k_factor_lin_ : 0.0;
        if (channel_trace_.is_open()) {
            channel_trace_ << slot << ',' << gnb_.id << ',' << ncr.node.id << ',' << bl.los
                           << ',' << bl.distance_3d << ',' << bl.path_loss_db << ','
                           << bl.shadowing_db << '\n';
        }

        for (size_t u = 0; u < nue; ++u) {
            ChannelLink& al = ncr_ue_[r][u];
            al.update(slot, ncr.node.pos, mobility_->position(u), grid_, cfg_.carrier_ghz,
                      kUeSpeedMps, kSlotDurationS);
            const double k_al = al.los ? k_factor_lin_ : 0.0;
            double mean_hh = 0.0;
            for (int k = 0; k < kNumRb; ++k) {
                mean_hh += n2(bl.fading.sample(k, k_bl)) * n2(al.fading.sample(k, k_al));
            }
            mean_hh /= kNumRb;

            for (size_t p = 0; p < ncr.access_panels.size(); ++p) {
                const auto v_acc =
                    panel_response(ncr.access_panels[p], ncr.node.pos, mobility_->position(u));
                auto& proj = proj_ncr_ue_[r][p * nue + u];
                proj = beam_projections(codebook_, v_acc);
                for (size_t m = 0; m < codebook_.beams.size(); ++m) {
                    CandidateMeasurement c;
                    c.kind = PathKind::ViaNcr;
                    c.ncr_id = ncr.node.id;
                    c.panel = static_cast<int>(p);
                    c.gnb_beam = ncr.gnb_beam;
                    c.ncr_beam = static_cast<int>(m);
                    c.rsrp_dbm = lin_to_db(p_ref * bl.amp2 * al.amp2 * bh_beam_gain * g_nom *
                                           n2(proj[m]) * mean_hh);
                    reports[u].candidates.push_back(c);
                }
            }
        }
    }
    return reports;
}

void SimEngine::init_la_if_new(size_t ue_index, const Association& a) {
    if (has_assoc_[ue_index]) {
        return;
    }
    has_assoc_[ue_index] = true;
    const double dl_snr = a.rsrp_dbm - sigma2_dbm_;
    la_[2 * ue_index + 0].last_sinr_db = dl_snr;
    la_[2 * ue_index + 1].last_sinr_db = dl_snr - (gnb_.tx_power_dbm - kUePowerDbm);
}

void SimEngine::touch_links_for_slot(uint64_t slot, const std::vector<uint32_t>& scheduled_ues) {
    for (uint32_t u : scheduled_ues) {
        gnb_ue_[u].update(slot, gnb_.pos, mobility_->position(u), grid_, cfg_.carrier_ghz,
                          kUeSpeedMps, kSlotDurationS);
    }
    for (size_t r = 0; r < ncrs_.size(); ++r) {
        if (!ncrs_[r].forwarding) {
            continue;
        }
        gnb_ncr_[r].update(slot, gnb_.pos, ncrs_[r].node.pos, grid_, cfg_.carrier_ghz, 0.0,
                           kSlotDurationS, /*force_los=*/true);
        for (uint32_t u : scheduled_ues) {
            ncr_ue_[r][u].update(slot, ncrs_[r].node.pos, mobility_->position(u), grid_,
                                 cfg_.carrier_ghz, kUeSpeedMps, kSlotDurationS);
        }
    }
}

void SimEngine::set_side_control(uint64_t slot, const SlotSchedule& sched,
                                 const std::vector<int>& rb_ue) {
    const size_t nue = ues_.size();
    const Direction dir = sched.dir;

    // Per-UE power levels are needed for the uplink gain cap.
    int total_rbs = 0;
    std::vector<int> alloc(nue, 0);
    for (int k = 0; k < kNumRb; ++k) {
        if (rb_ue[static_cast<size_t>(k)] >= 0) {
            ++total_rbs;
            ++alloc[static_cast<size_t>(rb_ue[static_cast<size_t>(k)])];
        }
    }

    for (size_t r = 0; r < ncrs_.size(); ++r) {
        NcrNode& ncr = ncrs_[r];
        if (!ncr.forwarding) {
            ncr.gain_lin = 0.0;
            continue;
        }
        // Access beams follow the side control for this slot: the beam
        // serving the most RBs of this panel's scheduled UEs wins.
        for (size_t p = 0; p < ncr.access_panels.size(); ++p) {
            std::vector<int> votes(codebook_.beams.size(), 0);
            bool any = false;
            for (int k = 0; k < kNumRb; ++k) {
                const int u = rb_ue[static_cast<size_t>(k)];
                if (u < 0 || !has_assoc_[static_cast<size_t>(u)]) continue;
                const Association& a = assoc_[static_cast<size_t>(u)];
                if (a.kind == PathKind::ViaNcr && a.ncr_id == ncr.node.id &&
                    a.panel == static_cast<int>(p)) {
                    ++votes[static_cast<size_t>(a.ncr_beam)];
                    any = true;
                }
            }
            if (any) {
                int best = 0;
                for (size_t m = 1; m < votes.size(); ++m) {
                    if (votes[m] > votes[static_cast<size_t>(best)]) {
                        best = static_cast<int>(m);
                    }
                }
                ncr.access_beam[p] = best;
            }
        }

        // Amplifier gain from the total input power this slot.
        double input_mw = 0.0;
        if (total_rbs > 0) {
            if (dir == Direction::Downlink) {
                const ChannelLink& bl = gnb_ncr_[r];
                const double k_bl = bl.los ? k_factor_lin_ : 0.0;
                const double pn =
                    n2(proj_gnb_ncr_nside_[r][static_cast<size_t>(ncr.backhaul_beam)]);
                const double p_rb = db_to_lin(gnb_.tx_power_dbm - 10.0 * std::log10(total_rbs));
                for (int k = 0; k < kNumRb; ++k) {
                    const int u = rb_ue[static_cast<size_t>(k)];
                    if (u < 0) continue;
                    const int f = assoc_[static_cast<size_t>(u)].gnb_beam;
                    input_mw += p_rb * bl.amp2 * n2(bl.fading.sample(k, k_bl)) *
                                n2(proj_gnb_ncr_gside_[r][static_cast<size_t>(f)]) * pn;
                }
                input_mw += kNumRb * sigma2_lin_;
            } else {
                for (int k = 0; k < kNumRb; ++k) {
                    const int u = rb_ue[static_cast<size_t>(k)];
                    if (u < 0) continue;
                    const ChannelLink& al = ncr_ue_[r][static_cast<size_t>(u)];
                    const double k_al = al.los ? k_factor_lin_ : 0.0;
                    const double p_rb = db_to_lin(
                        kUePowerDbm - 10.0 * std::log10(alloc[static_cast<size_t>(u)]));
                    for (size_t p = 0; p < ncr.access_panels.size(); ++p) {
                        input_mw +=
                            p_rb * al.amp2 * n2(al.fading.sample(k, k_al)) *
                            n2(proj_ncr_ue_[r][p * nue + static_cast<size_t>(u)]
                                           [static_cast<size_t>(ncr.access_beam[p])]);
                    }
                }
                input_mw += static_cast<double>(ncr.access_panels.size()) * kNumRb * sigma2_lin_;
            }
        } else {
            input_mw = kNumRb * sigma2_lin_;
        }
        ncr.gain_lin =
            af_gain_lin(lin_to_db(input_mw), cfg_.ncr_gain_max_db, ncr.node.tx_power_dbm);
        (void)slot;
    }
}

double SimEngine::link_gain2(const ChannelLink& link, int rb, double beam_gain2,
                             double k_lin) const {
    return link.amp2 * n2(link.fading.sample(rb, k_lin)) * beam_gain2;
}

std::vector<SimEngine::PathScalars> SimEngine::forwarded_paths(size_t ue_index, int rb,
                                                               int gnb_beam, uint64_t slot) {
    (void)slot;
    std::vector<PathScalars> out;
    const size_t nue = ues_.size();
    for (size_t r = 0; r < ncrs_.size(); ++r) {
        const NcrNode& ncr = ncrs_[r];
        if (!ncr.forwarding || ncr.gain_lin <= 0.0) {
            continue;
        }
        const ChannelLink& bl = gnb_ncr_[r];
        const double k_bl = bl.los ? k_factor_lin_ : 0.0;
        const double bh = link_gain2(
            bl, rb,
            n2(proj_gnb_ncr_gside_[r][static_cast<size_t>(gnb_beam)]) *
                n2(proj_gnb_ncr_nside_[r][static_cast<size_t>(ncr.backhaul_beam)]),
            k_bl);
        const ChannelLink& al = ncr_ue_[r][ue_index];
        const double k_al = al.los ? k_factor_lin_ : 0.0;
        for (size_t p = 0; p < ncr.access_panels.size(); ++p) {
            const double acc = link_gain2(
                al, rb,
                n2(proj_ncr_ue_[r][p * nue + ue_index]
                               [static_cast<size_t>(ncr.access_beam[p])]),
                k_al);
            out.push_back({r, p, acc, bh});
        }
    }
    return out;
}

SinrBreakdown SimEngine::evaluate_rb(size_t ue_index, int rb, int gnb_beam, double p_lin,
                                     Direction dir, uint64_t slot) {
    const ChannelLink& link = gnb_ue_[ue_index];
    const double k_lin = link.los ? k_factor_lin_ : 0.0;
    const double direct =
        link_gain2(link, rb, n2(proj_gnb_ue_[ue_index][static_cast<size_t>(gnb_beam)]), k_lin);

    const auto scalars = forwarded_paths(ue_index, rb, gnb_beam, slot);
    std::vector<NcrPathGain> useful_paths;
    std::vector<NcrPathGain> noise_paths;
    useful_paths.reserve(scalars.size());
    noise_paths.reserve(scalars.size());
    for (const PathScalars& s : scalars) {
        const double g = ncrs_[s.ncr].gain_lin;
        if (dir == Direction::Downlink) {
            useful_paths.push_back({s.access_gain2, g, s.backhaul_gain2});
            noise_paths.push_back({s.access_gain2, g, 0.0});
        } else {
            // Uplink mirrors the construction: the repeater-to-receiver leg
            // is the backhaul link, the transmitter-to-repeater leg the
            // access link.
            useful_paths.push_back({s.backhaul_gain2, g, s.access_gain2});
            noise_paths.push_back({s.backhaul_gain2, g, 0.0});
        }
    }
    const double s = useful_power(p_lin, direct, useful_paths);
    const double n = noise_power(sigma2_lin_, noise_paths);
    // Single cell, one bearer per RB: no co-scheduled interferers.
    return compute_sinr(s, 0.0, n, rb, dir);
}

void SimEngine::run_slot(uint64_t slot) {
    mobility_->step(kSlotDurationS);
    generate_traffic(sources_, slot, bearers_);

    if (!ncrs_.empty() && sweeps_.due_backhaul(slot)) {
        sweep_backhaul(slot);
    }
    if (sweeps_.due_access(slot)) {
        const auto reports = sweep_access(slot);
        const auto assoc = associate(reports, slot);
        for (size_t u = 0; u < assoc.size(); ++u) {
            init_la_if_new(u, assoc[u]);
            assoc_[u] = assoc[u];
            if (assoc_trace_.is_open()) {
                const Association& a = assoc[u];
                assoc_trace_ << slot << ',' << a.ue << ','
                             << (a.kind == PathKind::Direct ? "direct" : "via_ncr") << ','
                             << a.ncr_id << ',' << a.panel << ',' << a.gnb_beam << ','
                             << a.ncr_beam << ',' << a.rsrp_dbm << '\n';
            }
        }
    }

    const Direction dir = slot_type(slot);
    const int dir_idx = static_cast<int>(dir);

    std::vector<double> bits(bearers_.size(), 0.0);
    bearer_mcs_.assign(bearers_.size(), 0);
    for (size_t i = 0; i < bearers_.size(); ++i) {
        if (bearers_[i].dir != dir || bearers_[i].empty()) {
            continue;
        }
        bearer_mcs_[i] = sinr_to_mcs(bler_, la_[i], la_[i].last_sinr_db);
        bits[i] = transport_bits_per_rb(bler_.spectral_efficiency(bearer_mcs_[i]));
    }
    const SlotSchedule sched = rr_schedule(slot, dir, bearers_, bits);
    if (!sched.work_conserving) {
        ++result_.counters.work_conservation_violations;
    }

    const size_t nue = ues_.size();
    std::vector<int> rb_ue(kNumRb, -1);
    std::vector<std::vector<int>> ue_rbs(nue);
    int total_rbs = 0;
    for (int k = 0; k < kNumRb; ++k) {
        const int32_t bi = sched.rb_to_bearer[static_cast<size_t>(k)];
        if (bi < 0) continue;
        const int u = bi / 2;
        rb_ue[static_cast<size_t>(k)] = u;
        ue_rbs[static_cast<size_t>(u)].push_back(k);
        ++total_rbs;
    }
    if (total_rbs == 0) {
        return;
    }
    result_.counters.scheduled_rbs[dir_idx] += static_cast<uint64_t>(total_rbs);

    std::vector<uint32_t> scheduled;
    for (size_t u = 0; u < nue; ++u) {
        if (!ue_rbs[u].empty()) {
            scheduled.push_back(static_cast<uint32_t>(u));
            result_.counters.rb_per_ue[u][static_cast<size_t>(dir_idx)] += ue_rbs[u].size();
        }
    }

    touch_links_for_slot(slot, scheduled);
    set_side_control(slot, sched, rb_ue);

    const double p_dl_rb = db_to_lin(gnb_.tx_power_dbm - 10.0 * std::log10(total_rbs));
    for (uint32_t u : scheduled) {
        const int gnb_beam = assoc_[u].gnb_beam;
        const double p_lin =
            dir == Direction::Downlink
                ? p_dl_rb
                : db_to_lin(kUePowerDbm - 10.0 * std::log10(ue_rbs[u].size()));
        std::vector<double> per_rb_db;
        per_rb_db.reserve(ue_rbs[u].size());
        for (int k : ue_rbs[u]) {
            const SinrBreakdown sb = evaluate_rb(u, k, gnb_beam, p_lin, dir, slot);
            per_rb_db.push_back(lin_to_db(sb.sinr));
        }
        const double eff_db = effective_sinr_db(per_rb_db);

        const size_t bi = 2 * static_cast<size_t>(u) + static_cast<size_t>(dir_idx);
        const double p_err = bler_.bler(bearer_mcs_[bi], eff_db);
        RngStream crc(derive_seed(seed_, "crc", ues_[u].id, slot));
        const bool ok = crc.uniform() >= p_err;

        ++result_.counters.transmissions[static_cast<size_t>(dir_idx)];
        if (!ok) {
            ++result_.counters.crc_errors[static_cast<size_t>(dir_idx)];
        }
        outer_loop_update(la_[bi], ok);
        la_[bi].last_sinr_db = eff_db;

        if (slot >= cfg_.warmup_slots) {
            result_.samples.push_back(
                {seed_, ues_[u].id, ues_[u].group, dir, slot, eff_db});
        }
    }
}

void SimEngine::finish() {
    if (assoc_trace_.is_open()) assoc_trace_.close();
    if (channel_trace_.is_open()) channel_trace_.close();
}

RunResult SimEngine::run() {
    for (uint64_t slot = 0; slot < cfg_.slots; ++slot) {
        run_slot(slot);
    }
    finish();
    return result_;
}

RunResult run_simulation(const SimConfig& cfg, const std::string& scenario, uint64_t seed) {
    SimEngine engine(cfg, scenario, seed);
    return engine.run();
}

} // namespace ncrsim
