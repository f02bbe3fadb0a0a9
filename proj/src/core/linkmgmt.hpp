#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace ncrsim {

enum class PathKind : uint8_t { Direct = 0, ViaNcr = 1 };

struct CandidateMeasurement {
    PathKind kind = PathKind::Direct;
    uint32_t ncr_id = 0; // valid for ViaNcr
    int panel = 0;       // access panel index, ViaNcr only
    int gnb_beam = 0;
    int ncr_beam = 0;    // access beam, ViaNcr only
    double rsrp_dbm = -std::numeric_limits<double>::infinity();
};

struct MeasurementReport {
    uint32_t ue = 0;
    std::vector<CandidateMeasurement> candidates;
};

/// Serving path of one UE, frozen between access sweeps.
struct Association {
    uint32_t ue = 0;
    PathKind kind = PathKind::Direct;
    uint32_t ncr_id = 0;
    int panel = 0;
    int gnb_beam = 0;
    int ncr_beam = 0;
    uint64_t valid_from = 0;
    double rsrp_dbm = -std::numeric_limits<double>::infinity();
};

struct SweepSchedule {
    uint64_t t_backhaul_slots = 4000;
    uint64_t t_access_slots = 80;

    bool due_backhaul(uint64_t slot) const { return slot % t_backhaul_slots == 0; }
    bool due_access(uint64_t slot) const { return slot % t_access_slots == 0; }
};

/// argmax-RSRP association. Ties prefer the direct path, then the lowest
/// NCR id, panel and beam. Throws std::invalid_argument on empty reports.
Association associate_ue(const MeasurementReport& report, uint64_t slot);

std::vector<Association> associate(std::span<const MeasurementReport> reports, uint64_t slot);

} // namespace ncrsim
