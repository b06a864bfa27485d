#pragma once

#include <cstdint>
#include <random>

#include "spherig/rational.hpp"

namespace spherig {

// Value-passing seeded stream; no global state, so independent trials can
// run concurrently with their own streams.
class ParamStream {
public:
    explicit ParamStream(std::uint64_t seed) : eng_(seed) {}

    // Deterministic substream for trial t of a master seed.
    static ParamStream for_trial(std::uint64_t seed, std::uint64_t trial) {
        return ParamStream(seed * 0x9E3779B97F4A7C15ULL + trial * 0xBF58476D1CE4E5B9ULL + 1);
    }

    // Nonzero integer in [-2^bits, 2^bits].
    mpz_class next_int(int bits);
    // Positive integer in [1, 2^bits].
    mpz_class next_pos(int bits);
    // Random rational parameter num/den with |num| <= 2^bits, 1 <= den <= 2^bits.
    Rational next_param(int bits);

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Exact point on the sphere of the given radius centred at the origin:
// ||x||^2 == radius^2 holds as an identity of the stereographic
// parametrisation, not up to a tolerance. dim is the ambient dimension
// d+1, restricted to {2, 3}.
RatVec sample_sphere_point(int dim, const Rational& radius, ParamStream& stream,
                           int param_bits = 32);

// Random radius in the open interval (1, 2); spheres sampled this way are
// almost surely distinct and well separated.
Rational sample_radius(ParamStream& stream, int param_bits = 32);

}  // namespace spherig
