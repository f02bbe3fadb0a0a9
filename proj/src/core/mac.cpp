#include "core/mac.hpp"

#include <cassert>

namespace ncrsim {

Direction slot_type(uint64_t slot) {
    static constexpr std::array<Direction, 10> kPattern = {
        Direction::Downlink, Direction::Downlink, Direction::Uplink,   Direction::Uplink,
        Direction::Uplink,   Direction::Downlink, Direction::Downlink, Direction::Uplink,
        Direction::Uplink,   Direction::Downlink,
    };
    return kPattern[slot % kPattern.size()];
}

void generate_traffic(std::vector<CbrSource>& sources, uint64_t slot,
                      std::vector<Bearer>& bearers) {
    for (CbrSource& src : sources) {
        while (static_cast<double>(slot) >= src.next_arrival) {
            for (Bearer& b : bearers) {
                if (b.ue == src.ue && b.dir == src.dir) {
                    b.enqueue(slot, src.packet_bits);
                    break;
                }
            }
            src.next_arrival += src.period_slots;
        }
    }
}

SlotSchedule rr_schedule(uint64_t slot, Direction dir, std::vector<Bearer>& bearers,
                         std::span<const double> bits_per_rb) {
    SlotSchedule sched;
    sched.slot = slot;
    sched.dir = dir;
    sched.rb_to_bearer.fill(-1);

    for (int rb = 0; rb < kNumRb; ++rb) {
        int32_t best = -1;
        for (size_t i = 0; i < bearers.size(); ++i) {
            const Bearer& b = bearers[i];
            if (b.dir != dir || b.empty()) {
                continue;
            }
            if (best < 0) {
                best = static_cast<int32_t>(i);
                continue;
            }
            const Bearer& cur = bearers[static_cast<size_t>(best)];
            const uint64_t w = b.hol_wait(slot);
            const uint64_t wc = cur.hol_wait(slot);
            if (w > wc || (w == wc && b.ue < cur.ue)) {
                best = static_cast<int32_t>(i);
            }
        }
        if (best < 0) {
            break; // every eligible queue is empty, the rest stays idle
        }
        sched.rb_to_bearer[static_cast<size_t>(rb)] = best;
        bearers[static_cast<size_t>(best)].drain(bits_per_rb[static_cast<size_t>(best)]);
    }

    // Work conservation: an idle RB implies no eligible backlog remained.
    for (int rb = 0; rb < kNumRb; ++rb) {
        if (sched.rb_to_bearer[static_cast<size_t>(rb)] >= 0) {
            continue;
        }
        for (const Bearer& b : bearers) {
            if (b.dir == dir && !b.empty()) {
                sched.work_conserving = false;
            }
        }
        assert(sched.work_conserving);
        break;
    }
    return sched;
}

} // namespace ncrsim
