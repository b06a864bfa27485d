#include "spherig/sampling.hpp"

#include "spherig/errors.hpp"

namespace spherig {

mpz_class ParamStream::next_int(int bits) {
    const std::uint64_t span = (bits >= 63) ? ~0ULL : ((1ULL << (bits + 1)) - 1);
    while (true) {
        mpz_class v;
        if (bits <= 62) {
            std::uint64_t u = eng_() % (span + 1);
            long long s = static_cast<long long>(u) - static_cast<long long>(span / 2);
            v = static_cast<long>(s);
        } else {
            v = 0;
            int got = 0;
            while (got < bits) {
                v <<= 32;
                v += static_cast<unsigned long>(eng_() & 0xFFFFFFFFULL);
                got += 32;
            }
            if (eng_() & 1) v = -v;
        }
        if (v != 0) return v;
    }
}

mpz_class ParamStream::next_pos(int bits) {
    mpz_class v = next_int(bits);
    if (v < 0) v = -v;
    if (v == 0) v = 1;
    return v;
}

Rational ParamStream::next_param(int bits) {
    return make_rational(next_int(bits), next_pos(bits));
}

RatVec sample_sphere_point(int dim, const Rational& radius, ParamStream& stream,
                           int param_bits) {
    if (radius <= 0) throw input_error("sphere radius must be positive");
    if (dim == 2) {
        // circle: t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))
        const Rational t = stream.next_param(param_bits);
        const Rational t2 = t * t;
        const Rational den = 1 + t2;
        return {radius * (1 - t2) / den, radius * 2 * t / den};
    }
    if (dim == 3) {
        const Rational u = stream.next_param(param_bits);
        const Rational v = stream.next_param(param_bits);
        const Rational s = u * u + v * v;
        const Rational den = 1 + s;
        return {radius * (1 - s) / den, radius * 2 * u / den, radius * 2 * v / den};
    }
    throw scope_error("sphere sampling supports ambient dimensions 2 and 3 only");
}

Rational sample_radius(ParamStream& stream, int param_bits) {
    // 1 + a/b with 0 < a < b
    mpz_class b = stream.next_pos(param_bits) + 1;
    mpz_class a = stream.next_pos(param_bits) % (b - 1) + 1;
    return 1 + make_rational(a, b);
}

}  // namespace spherig
