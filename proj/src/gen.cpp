#include "lpcut/gen.hpp"

#include <cmath>

#include "lpcut/rng.hpp"

namespace lpcut {

GridInstance grid_denoise_instance(const GridDenoiseParams& params) {
    const int w = params.width;
    const int h = params.height;
    if (w < 1 || h < 1)
        throw InputError("grid dimensions must be positive");
    if (!(params.noise_rate >= 0.0 && params.noise_rate <= 1.0))
        throw InputError("noise rate must be in [0,1]");
    if (!(std::isfinite(params.data_weight) && params.data_weight > 0.0) ||
        !(std::isfinite(params.smoothness) && params.smoothness > 0.0))
        throw InputError("data weight and smoothness must be positive");

    GridInstance g;
    g.width = w;
    g.height = h;
    g.energy.topology.vertex_count = w * h;

    // Clean image: centered rectangle of ones (all ones when the grid is
    // too small for a margin).
    g.clean.resize(static_cast<std::size_t>(w) * h);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            g.clean[static_cast<std::size_t>(r) * w + c] =
                (r >= h / 4 && r < h - h / 4 && c >= w / 4 && c < w - w / 4) ? 1 : 0;

    Rng rng(params.seed);
    g.observed = g.clean;
    for (auto& pixel : g.observed)
        if (rng.uniform(0.0, 1.0) < params.noise_rate)
            pixel ^= 1;

    g.energy.unaries.reserve(g.observed.size());
    for (std::uint8_t obs : g.observed) {
        double cost0 = obs == 0 ? 0.0 : params.data_weight;
        double cost1 = obs == 1 ? 0.0 : params.data_weight;
        g.energy.unaries.push_back({cost0, cost1});
    }

    // Right then down neighbor, raster order.
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            int v = r * w + c;
            if (c + 1 < w)
                g.energy.topology.edges.emplace_back(v, v + 1);
            if (r + 1 < h)
                g.energy.topology.edges.emplace_back(v, v + w);
        }
    }
    g.energy.pairwise.assign(g.energy.topology.edges.size(),
                             {0.0, params.smoothness, params.smoothness, 0.0});
    return g;
}

} // namespace lpcut
