#pragma once

#include "rescuesim/vec3.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace rescuesim {

// FNV-1a, used to derive labeled sub-stream seeds from one master seed so
// that every consumer (physics, spread, wind, policy, ...) owns an
// independent, reproducible stream.
inline uint64_t hash_label(uint64_t seed, std::string_view label) {
    uint64_t h = 14695981039346656037ull ^ seed;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    // splitmix finalizer to spread low-entropy labels
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

inline uint64_t derive_seed(uint64_t master, std::string_view label) {
    return hash_label(master, label);
}

inline uint64_t derive_seed(uint64_t master, std::string_view label, uint64_t index) {
    return hash_label(hash_label(master, label) + 0x632be59bd9b4e019ull * (index + 1), label);
}

// Deterministic random stream. Distributions are implemented by hand on top
// of mt19937_64 because the standard distribution objects are not pinned
// across library implementations, and replay equality depends on bit-stable
// draws.
class Rng {
public:
    Rng() : engine_(0xda3e39cb94b95bdbull) {}
    explicit Rng(uint64_t seed) : engine_(seed) {}

    void seed(uint64_t s) { engine_.seed(s); }

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform direction on the unit sphere; always consumes exactly two draws.
    Vec3 unit_vector() {
        double y = 2.0 * uniform() - 1.0;
        double phi = 2.0 * kPi * uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - y * y));
        return {r * std::cos(phi), y, r * std::sin(phi)};
    }

    // Uniform direction in the horizontal (xz) plane; one draw.
    Vec3 unit_horizontal() {
        double phi = 2.0 * kPi * uniform();
        return {std::cos(phi), 0.0, std::sin(phi)};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rescuesim
