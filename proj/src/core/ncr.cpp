#include "core/ncr.hpp"

#include <cmath>
#include <stdexcept>

#include "core/channel.hpp"

namespace ncrsim {

NcrNode make_ncr(uint32_t id, const NcrPlacement& placement, uint32_t controlling_gnb) {
    NcrNode ncr;
    ncr.node.id = id;
    ncr.node.kind = NodeKind::Ncr;
    ncr.node.pos = placement.pos;
    ncr.node.tx_power_dbm = kNcrPowerDbm;
    ncr.node.group = BlockGroup::None;
    ncr.controlling_gnb = controlling_gnb;
    ncr.backhaul_panel.boresight = placement.backhaul;
    for (const PanelSpec& spec : placement.access) {
        UraPanel panel;
        panel.boresight = spec;
        ncr.access_panels.push_back(panel);
        ncr.access_beam.push_back(0);
    }
    return ncr;
}

double af_gain_lin(double total_input_dbm, double g_max_db, double output_cap_dbm) {
    if (!std::isfinite(total_input_dbm)) {
        throw std::invalid_argument("NCR input power must be finite");
    }
    const double gain_db = std::min(g_max_db, output_cap_dbm - total_input_dbm);
    return db_to_lin(gain_db);
}

double af_gain_from_per_rb_input(double input_dbm_per_rb, int occupied_rbs, double g_max_db,
                                 double output_cap_dbm) {
    const double total = input_dbm_per_rb + 10.0 * std::log10(static_cast<double>(occupied_rbs));
    return af_gain_lin(total, g_max_db, output_cap_dbm);
}

double forwarded_term(double access_gain2, double gain_lin, double backhaul_gain2, double p_lin) {
    return access_gain2 * gain_lin * backhaul_gain2 * p_lin;
}

} // namespace ncrsim
