#include "core/linkmgmt.hpp"

#include <stdexcept>
#include <tuple>

namespace ncrsim {

namespace {

// Lexicographic preference among equal-RSRP candidates.
auto tie_key(const CandidateMeasurement& c) {
    return std::make_tuple(c.kind == PathKind::Direct ? 0 : 1, c.ncr_id, c.panel, c.gnb_beam,
                           c.ncr_beam);
}

} // namespace

Association associate_ue(const MeasurementReport& report, uint64_t slot) {
    if (report.candidates.empty()) {
        throw std::invalid_argument("measurement report without candidates");
    }
    const CandidateMeasurement* best = &report.candidates.front();
    for (const CandidateMeasurement& c : report.candidates) {
        if (c.rsrp_dbm > best->rsrp_dbm ||
            (c.rsrp_dbm == best->rsrp_dbm && tie_key(c) < tie_key(*best))) {
            best = &c;
        }
    }
    Association a;
    a.ue = report.ue;
    a.kind = best->kind;
    a.ncr_id = best->ncr_id;
    a.panel = best->panel;
    a.gnb_beam = best->gnb_beam;
    a.ncr_beam = best->ncr_beam;
    a.valid_from = slot;
    a.rsrp_dbm = best->rsrp_dbm;
    return a;
}

std::vector<Association> associate(std::span<const MeasurementReport> reports, uint64_t slot) {
    std::vector<Association> out;
    out.reserve(reports.size());
    for (const MeasurementReport& r : reports) {
        out.push_back(associate_ue(r, slot));
    }
    return out;
}

} // namespace ncrsim
