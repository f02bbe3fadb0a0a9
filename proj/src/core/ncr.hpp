#pragma once

#include <cstdint>
#include <vector>

#include "core/antenna.hpp"
#include "core/geometry.hpp"

namespace ncrsim {

/// One network-controlled repeater: a backhaul panel steered at the
/// controlling gNB plus one or two access panels. The per-slot forwarding
/// state (gain, beams, on/off) mirrors the most recent side control
/// information; the repeater takes no decisions of its own.
struct NcrNode {
    NetworkNode node;
    UraPanel backhaul_panel;
    std::vector<UraPanel> access_panels;
    uint32_t controlling_gnb = kGnbId;

    // Side control state for the current slot.
    bool forwarding = true;
    double gain_lin = 0.0;            // amplify-and-forward power gain
    int backhaul_beam = 0;            // NCR beam of the frozen backhaul pair
    int gnb_beam = 0;                 // gNB beam of the frozen backhaul pair
    std::vector<int> access_beam;     // per access panel
};

NcrNode make_ncr(uint32_t id, const NcrPlacement& placement, uint32_t controlling_gnb);

/// Amplify-and-forward gain from the total received power: the gain is
/// capped so the radiated total stays at or below `output_cap_dbm`, and is
/// flat across the RBs of a slot. Throws on non-finite input.
double af_gain_lin(double total_input_dbm, double g_max_db, double output_cap_dbm);

/// Same cap arithmetic from a uniform per-RB input level.
double af_gain_from_per_rb_input(double input_dbm_per_rb, int occupied_rbs, double g_max_db,
                                 double output_cap_dbm);

/// One forwarded-path summand of the useful-power equation:
/// |gamma_access|^2 * g * |gamma_backhaul|^2 * p, all in linear power.
double forwarded_term(double access_gain2, double gain_lin, double backhaul_gain2, double p_lin);

} // namespace ncrsim
