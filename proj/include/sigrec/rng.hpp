#ifndef SIGREC_RNG_HPP
#define SIGREC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace sigrec {

// splitmix64 (Steele, Lea, Flood 2014). Used both as a stream generator and
// to derive independent sub-stream seeds, so one user-facing seed can feed
// several consumers without correlation.
inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman, Vigna 2018), seeded through splitmix64.
// Fully specified here so draws are bit-identical across platforms;
// std::uniform_real_distribution is deliberately avoided for the same reason.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    // Derives the seed for an independent sub-stream of a master seed.
    static uint64_t substream_seed(uint64_t seed, uint64_t index) {
        uint64_t sm = seed ^ (0x6a09e667f3bcc909ULL + index * 0x3c6ef372fe94f82bULL);
        return splitmix64(sm);
    }

    uint64_t next_u64() {
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

    // uniform on [0,1): top 53 bits, so every value is an exact double
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; spare value cached. Standard normal.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace sigrec

#endif
