#ifndef LPCUT_RNG_HPP
#define LPCUT_RNG_HPP

#include <cstdint>
#include <random>

namespace lpcut {

/// Seedable pseudo-random source used by the instance generators.
///
/// The raw stream is std::mt19937_64, which the standard pins bit-exactly, and
/// the two derived draws are fixed here rather than delegated to the standard
/// distributions (whose algorithms vary between standard libraries):
///   uniform(lo, hi): lo + (hi - lo) * ((next() >> 11) * 2^-53)   in [lo, hi)
///   below(n):        next() % n                                  in [0, n)
/// Same seed, same draw sequence, same instance — on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::mt19937_64 engine_;
};

} // namespace lpcut

#endif
