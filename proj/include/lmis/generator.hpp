#pragma once

#include "lmis/geometry.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace lmis {

/// splitmix64. Fixed here by its recurrence so generated corpora can be
/// reproduced bit for bit in any language:
///   state  = state + 0x9E3779B97F4A7C15            (mod 2^64)
///   z      = state
///   z      = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2^64)
///   z      = (z XOR (z >> 27)) * 0x94D049BB133111EB (mod 2^64)
///   output = z XOR (z >> 31)
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from {0, ..., bound-1} by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) {
            throw Error("next_below: bound must be positive");
        }
        const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

  private:
    std::uint64_t state_;
};

enum class GenMode { Equilateral, General, Uniform };

/// Reproducible random-instance recipe. All drawn values are multiples of
/// `grain` inside the given ranges; equilateral mode gives every shape
/// equal arms, uniform mode draws one arm-length pair shared by the whole
/// instance, general mode draws both arms per shape.
struct GenConfig {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::Equilateral;
    Rational length_min{2};
    Rational length_max{8};
    Rational coord_min{0};
    Rational coord_max{100};
    std::array<Rational, 4> shape_mix{Rational(1, 4), Rational(1, 4), Rational(1, 4),
                                      Rational(1, 4)};
    Rational grain{1, 4};
};

namespace detail {

inline std::uint64_t grid_points(const Rational& lo, const Rational& hi, const Rational& grain) {
    const BigInt count = floor_to_int((hi - lo) / grain) + 1;
    if (count > std::numeric_limits<std::int64_t>::max()) {
        throw Error("generate: range/grain combination too fine");
    }
    return count.convert_to<std::uint64_t>();
}

inline Rational draw_on_grain(SplitMix64& rng, const Rational& lo, const Rational& hi,
                              const Rational& grain) {
    return lo + grain * Rational(BigInt(rng.next_below(grid_points(lo, hi, grain))));
}

}  // namespace detail

/// Deterministic instance generation: one fixed draw order (orientation,
/// corner x, corner y, then lengths as the mode requires) on a pure
/// integer random stream, so a (config) pair names the instance uniquely
/// on every platform.
inline std::vector<LShape> generate(const GenConfig& cfg) {
    if (cfg.length_min <= 0 || cfg.length_max < cfg.length_min) {
        throw Error("generate: invalid length range");
    }
    if (cfg.coord_max < cfg.coord_min) {
        throw Error("generate: invalid coordinate range");
    }
    if (cfg.grain <= 0) {
        throw Error("generate: grain must be positive");
    }
    Rational mix_total = 0;
    for (const Rational& w : cfg.shape_mix) {
        if (w < 0) {
            throw Error("generate: negative shape-mix weight");
        }
        mix_total += w;
    }
    if (mix_total != 1) {
        throw Error("generate: shape mix must sum to 1");
    }

    SplitMix64 rng(cfg.seed);
    const auto draw_class = [&]() -> ShapeClass {
        const Rational u(BigInt(rng.next()), BigInt(1) << 64);
        Rational cum = 0;
        for (int c = 0; c < 4; ++c) {
            cum += cfg.shape_mix[c];
            if (u < cum) {
                return static_cast<ShapeClass>(c);
            }
        }
        return ShapeClass::L4;
    };
    const auto draw_len = [&] { return detail::draw_on_grain(rng, cfg.length_min, cfg.length_max, cfg.grain); };
    const auto draw_coord = [&] { return detail::draw_on_grain(rng, cfg.coord_min, cfg.coord_max, cfg.grain); };

    Rational shared_h, shared_v;
    if (cfg.mode == GenMode::Uniform) {
        shared_h = draw_len();
        shared_v = draw_len();
    }

    std::vector<LShape> out;
    out.reserve(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const ShapeClass cls = draw_class();
        const Rational cx = draw_coord();
        const Rational cy = draw_coord();
        Rational len_h, len_v;
        switch (cfg.mode) {
            case GenMode::Equilateral:
                len_h = len_v = draw_len();
                break;
            case GenMode::General:
                len_h = draw_len();
                len_v = draw_len();
                break;
            case GenMode::Uniform:
                len_h = shared_h;
                len_v = shared_v;
                break;
        }
        LShape l;
        l.corner_x = cx;
        l.corner_y = cy;
        switch (cls) {
            case ShapeClass::L1:
                l.htip_x = cx + len_h;
                l.vtip_y = cy + len_v;
                break;
            case ShapeClass::L2:
                l.htip_x = cx + len_h;
                l.vtip_y = cy - len_v;
                break;
            case ShapeClass::L3:
                l.htip_x = cx - len_h;
                l.vtip_y = cy - len_v;
                break;
            case ShapeClass::L4:
                l.htip_x = cx - len_h;
                l.vtip_y = cy + len_v;
                break;
        }
        out.push_back(std::move(l));
    }
    return out;
}

}  // namespace lmis
