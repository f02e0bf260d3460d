#include "gonality/hecke.hpp"

#include "gonality/classnum.hpp"
#include "gonality/modgenus.hpp"

#include <cstdlib>
#include <string>

namespace gonality {

namespace {

std::int64_t root_count(std::int64_t n, std::int64_t t, std::int64_t m, std::int64_t modulus)
{
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t const v = mod(mod(x * x, modulus) - mod(t * x, modulus) + m, modulus);
        if (v == 0)
            ++count;
    }
    return count;
}

Rational elliptic_term(Level const & level, std::int64_t m)
{
    std::int64_t const n = level.value();
    Rational sum(0);
    for (std::int64_t t = 0; t * t < 4 * m; ++t) {
        std::int64_t const disc = t * t - 4 * m;
        Rational inner(0);
        for (std::int64_t f = 1; f * f <= -disc; ++f) {
            if (disc % (f * f) != 0)
                continue;
            std::int64_t const d = disc / (f * f);
            std::int64_t const r = mod(d, 4);
            if (r != 0 && r != 1)
                continue;
            std::int64_t const nf = gcd(n, f);
            std::int64_t const index_ratio = level.psi() / Level(n / nf).psi();
            std::int64_t const roots = root_count(n, t, m, n * nf);
            if (roots == 0)
                continue;
            inner += weighted_class_number(d) * Rational(index_ratio * roots);
        }
        // t and -t contribute equally
        sum += t == 0 ? inner : inner * Rational(2);
    }
    return sum * Rational(-1, 2);
}

Rational hyperbolic_term(Level const & level, std::int64_t m)
{
    std::int64_t const n = level.value();
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(m)) {
        std::int64_t const e = m / d;
        std::int64_t inner = 0;
        for (std::int64_t tau : divisors(n)) {
            std::int64_t const g = gcd(tau, n / tau);
            if ((e - d) % g == 0)
                inner += euler_phi(g);
        }
        sum += std::min(d, e) * inner;
    }
    return Rational(-sum, 2);
}

} // namespace

TraceValue trace_Tm(Level const & level, std::int64_t m)
{
    if (m < 1)
        throw domain_error("trace_Tm: m must be positive");
    if (gcd(m, level.value()) != 1)
        throw domain_error("trace_Tm: gcd(m, N) must be 1 (m = " + std::to_string(m) +
                           ", N = " + std::to_string(level.value()) + ")");
    Rational total = is_square(m) ? Rational(level.psi(), 12) : Rational(0);
    total += elliptic_term(level, m);
    total += hyperbolic_term(level, m);
    total += Rational(sigma1(m));
    if (total.denominator() != 1)
        throw std::logic_error("trace_Tm: non-integral trace at N = " +
                               std::to_string(level.value()) + ", m = " + std::to_string(m));
    return {level.value(), m, total.numerator()};
}

PointCount count_points(Level const & level, std::int64_t p, int e)
{
    if (!is_prime(p))
        throw domain_error("count_points: " + std::to_string(p) + " is not prime");
    if (level.value() % p == 0)
        throw domain_error("count_points: p = " + std::to_string(p) + " divides N = " +
                           std::to_string(level.value()));
    if (e == 1)
        return {level.value(), p, p + 1 - trace_Tm(level, p).value};
    if (e == 2) {
        std::int64_t const g = genus_X0(level).genus;
        std::int64_t const q = p * p;
        return {level.value(), q, q + 1 + p * g - trace_Tm(level, q).value};
    }
    throw domain_error("count_points: degree must be 1 or 2");
}

bool satisfies_weil_bound(std::int64_t count, std::int64_t q, std::int64_t genus)
{
    std::int64_t const dev = std::llabs(count - (q + 1));
    // dev <= 2 g sqrt(q)  <=>  dev^2 <= 4 g^2 q
    return dev * dev <= 4 * genus * genus * q;
}

} // namespace gonality
