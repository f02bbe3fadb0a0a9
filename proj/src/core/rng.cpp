#include "core/rng.hpp"

#include <cmath>

namespace ncrsim {

namespace {

uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(uint64_t seed) {
    uint64_t x = seed;
    for (auto& s : s_) {
        s = splitmix64(x);
    }
}

uint64_t RngStream::next_u64() {
    // xoshiro256**
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // Box-Muller; u1 shifted away from zero so log() stays finite.
    double u1 = uniform();
    double u2 = uniform();
    u1 = u1 <= 0.0 ? 0x1.0p-53 : u1;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t a, uint64_t b) {
    // FNV-1a over the tag, then mix the ids through splitmix rounds.
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    uint64_t x = master ^ h;
    splitmix64(x);
    x ^= a * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL;
    splitmix64(x);
    x ^= b * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL;
    return splitmix64(x);
}

} // namespace ncrsim
