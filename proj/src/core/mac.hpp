#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "core/phy.hpp"

namespace ncrsim {

inline constexpr int kNumRb = 66;
inline constexpr double kSlotDurationS = 0.25e-3;
inline constexpr double kCbrPacketBits = 3072.0;

/// TDD pattern [DL S UL UL UL DL S UL UL DL]; S slots carry downlink.
Direction slot_type(uint64_t slot);

struct Packet {
    uint64_t arrival_slot = 0;
    double bits_left = kCbrPacketBits;
};

/// Per-UE, per-direction FIFO queue. The scheduling metric is the age of
/// the head-of-line packet; it resets only once the queue drains.
struct Bearer {
    uint32_t ue = 0;
    Direction dir = Direction::Downlink;
    std::deque<Packet> queue;

    bool empty() const { return queue.empty(); }
    uint64_t hol_wait(uint64_t slot) const {
        return queue.empty() ? 0 : slot - queue.front().arrival_slot;
    }
    void enqueue(uint64_t slot, double bits) { queue.push_back({slot, bits}); }
    /// Removes `bits` from the head of the queue (transmission).
    void drain(double bits) {
        while (bits > 0.0 && !queue.empty()) {
            if (queue.front().bits_left > bits) {
                queue.front().bits_left -= bits;
                bits = 0.0;
            } else {
                bits -= queue.front().bits_left;
                queue.pop_front();
            }
        }
    }
};

struct CbrSource {
    uint32_t ue = 0;
    Direction dir = Direction::Downlink;
    double period_slots = 1.0;
    double packet_bits = kCbrPacketBits;
    double next_arrival = 0.0;
};

/// Enqueues one packet per source each time its inter-arrival period
/// elapses (multiple per slot when the period is below one slot).
void generate_traffic(std::vector<CbrSource>& sources, uint64_t slot,
                      std::vector<Bearer>& bearers);

struct SlotSchedule {
    uint64_t slot = 0;
    Direction dir = Direction::Downlink;
    std::array<int32_t, kNumRb> rb_to_bearer{}; // bearer index, -1 = idle
    bool work_conserving = true;

    int allocated_count(int32_t bearer) const {
        int n = 0;
        for (int32_t b : rb_to_bearer) n += (b == bearer);
        return n;
    }
};

/// Longest-wait-first round robin: every RB goes to the eligible non-empty
/// bearer whose head packet has waited longest (ties to the lowest UE id).
/// Bearers are drained as RBs are granted, so the metric updates within
/// the slot. bits_per_rb gives each bearer's transport capacity per RB.
SlotSchedule rr_schedule(uint64_t slot, Direction dir, std::vector<Bearer>& bearers,
                         std::span<const double> bits_per_rb);

} // namespace ncrsim
