#ifndef LPCUT_GEN_HPP
#define LPCUT_GEN_HPP

#include <cstdint>
#include <vector>

#include "lpcut/energy.hpp"

namespace lpcut {

struct GridDenoiseParams {
    int width = 0;
    int height = 0;
    double noise_rate = 0.0;   // per-pixel flip probability
    double data_weight = 1.0;  // unary cost of disagreeing with the observation
    double smoothness = 1.0;   // pairwise cost of disagreeing neighbors
    std::uint64_t seed = 1;
};

/// A binary denoising problem on a 4-connected grid. Pixels are row-major,
/// vertex = row * width + col. The clean image is a centered rectangle of
/// ones; the observation flips each pixel independently with probability
/// noise_rate. Unary cost of label l at pixel v is |observed(v) - l| *
/// data_weight; every pairwise table is (0, smoothness, smoothness, 0), which
/// is always certified submodular for all p.
struct GridInstance {
    EnergyFunction energy;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> clean;
    std::vector<std::uint8_t> observed;
};

GridInstance grid_denoise_instance(const GridDenoiseParams& params);

} // namespace lpcut

#endif
