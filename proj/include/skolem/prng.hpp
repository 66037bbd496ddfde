#pragma once

#include <cstdint>
#include <vector>

namespace skolem {

// Deterministic generator (splitmix64 core). We roll our own because search
// results must be byte-identical across platforms and standard library
// distributions are not portable.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n). n must be > 0.
    uint64_t below(uint64_t n) {
        // Rejection sampling to kill modulo bias; the loop almost never spins.
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = next();
        while (v >= limit)
            v = next();
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    uint64_t state_;
};

// Stable mix used wherever the contract says "seed derived from the inputs".
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a * 0x9e3779b97f4a7c15ULL + b + 0xd1b54a32d192ed03ULL;
    z = (z ^ (z >> 32)) * 0xda942042e4dd58b5ULL;
    return z ^ (z >> 29);
}

}  // namespace skolem
