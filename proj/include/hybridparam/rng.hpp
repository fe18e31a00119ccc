#ifndef HYBRIDPARAM_RNG_HPP
#define HYBRIDPARAM_RNG_HPP

#include <cstdint>
#include <vector>

namespace hybridparam {

// Splittable splitmix64 stream. Used instead of std::mt19937 +
// std::uniform_int_distribution because the distribution's output is not
// pinned by the standard and suite reports must be reproducible bit for bit.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double real() {  // [0,1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool chance(double p) { return real() < p; }

    // Independent child stream; distinct tags give distinct streams.
    Rng split(uint64_t tag) {
        Rng child(state_ ^ (0x517cc1b727220a95ULL * (tag + 1)));
        child.next();
        return child;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace hybridparam

#endif
