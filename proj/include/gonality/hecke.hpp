#ifndef GONALITY_HECKE_HPP
#define GONALITY_HECKE_HPP

#include "gonality/arith.hpp"

#include <cstdint>

namespace gonality {

struct TraceValue
{
    std::int64_t level;
    std::int64_t m;
    std::int64_t value;
};

struct PointCount
{
    std::int64_t level;
    std::int64_t q;
    std::int64_t count;
};

/*
 * Trace of T_m on S_2(Gamma0(N)), gcd(m, N) = 1, by the Eichler-Selberg
 * trace formula. The elliptic terms use weighted class numbers of
 * (t^2 - 4m)/f^2 with the local multiplicity
 *   psi(N)/psi(N/N_f) * #{x mod N : x^2 - t x + m = 0 mod N N_f},  N_f = gcd(N, f).
 * Accumulated exactly; throws std::logic_error if the result is not integral.
 */
TraceValue trace_Tm(Level const & level, std::int64_t m);

/// #X0(N)(F_{p^e}) for e in {1, 2}, p a prime not dividing N.
PointCount count_points(Level const & level, std::int64_t p, int e);

/// |count - (q + 1)| <= 2 g sqrt(q), decided in integers.
bool satisfies_weil_bound(std::int64_t count, std::int64_t q, std::int64_t genus);

} // namespace gonality

#endif
