#include "trigcert/oracle.hpp"

#include <stdexcept>

namespace trigcert {

namespace {

const double kPi = 3.14159265358979323846;

template <class P>
SampleReport dense_min_impl(const P& p, int m) {
    if (m < 2) throw std::invalid_argument("dense_min: need at least 2 samples");
    SampleReport rep;
    rep.samples = m;
    for (int i = 0; i < m; ++i) {
        double x = kPi * i / (m - 1);
        double v = eval_float(p, x);
        if (i == 0 || v < rep.min_value) {
            rep.min_value = v;
            rep.argmin_x = x;
        }
    }
    return rep;
}

}  // namespace

SampleReport dense_min(const SinePoly& p, int m) { return dense_min_impl(p, m); }
SampleReport dense_min(const CosinePoly& p, int m) { return dense_min_impl(p, m); }

std::uint64_t TestRng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t TestRng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

long TestRng::range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("TestRng::range: hi < lo");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double TestRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SinePoly random_sine_poly(int degree, int magnitude, std::uint64_t seed) {
    if (degree < 1) throw std::invalid_argument("random_sine_poly: degree must be >= 1");
    if (magnitude < 1) throw std::invalid_argument("random_sine_poly: magnitude must be >= 1");
    TestRng rng(seed);
    std::vector<Rational> coeffs(static_cast<size_t>(degree));
    for (auto& c : coeffs) {
        long num = rng.range(-magnitude, magnitude);
        long den = rng.range(1, magnitude);
        c = make_rational(num, den);
    }
    return SinePoly(std::move(coeffs));
}

}  // namespace trigcert
