#ifndef TRIGCERT_ORACLE_HPP
#define TRIGCERT_ORACLE_HPP

#include <cstdint>

#include "trigcert/trigpoly.hpp"

namespace trigcert {

// Floating cross-checks for the exact engine. Test support only: the oracle
// never overrides a certified verdict.

struct SampleReport {
    double min_value = 0.0;
    double argmin_x = 0.0;
    int samples = 0;
};

// Minimum of eval_float over m uniform points in [0, pi].
SampleReport dense_min(const SinePoly& p, int m);
SampleReport dense_min(const CosinePoly& p, int m);

// Small deterministic generator (splitmix64) so every randomized test is
// reproducible from its seed.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);
    // uniform integer in [lo, hi]
    long range(long lo, long hi);
    double uniform01();

private:
    std::uint64_t state_;
};

// Deterministic pseudo-random sine polynomial: numerators in
// [-magnitude, magnitude], denominators in [1, magnitude].
SinePoly random_sine_poly(int degree, int magnitude, std::uint64_t seed);

}  // namespace trigcert

#endif
