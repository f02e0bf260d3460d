#ifndef GONALITY_MODGENUS_HPP
#define GONALITY_MODGENUS_HPP

#include "gonality/arith.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gonality {

enum class CurveKind { full, single_quotient, pair_quotient };

/*
 * X0(N), X0(N)/w_d, or X0(N)/<w_d, w_d'>.
 *
 * A pair quotient is stored by its subgroup {1, w_a, w_b, w_c} of the
 * Atkin-Lehner group, with (a, b) the two smallest nontrivial indices and
 * c = a*b/gcd(a,b)^2 the third. Textual form: X0(N), X0(N)/d, X0(N)/<a,b>;
 * X0(N)/<d> is accepted on input as a synonym for X0(N)/d.
 */
class CurveRef
{
  public:
    static CurveRef full(std::int64_t n);
    static CurveRef single(std::int64_t n, std::int64_t d);
    static CurveRef pair(std::int64_t n, std::int64_t d1, std::int64_t d2);

    /// Parses the textual form; throws domain_error naming the problem.
    static CurveRef from_string(std::string_view text);
    /// As from_string, nullopt on any syntax or divisibility error.
    static std::optional<CurveRef> parse(std::string_view text);

    std::int64_t level() const { return n_; }
    CurveKind kind() const { return kind_; }
    /// Single quotient: d. Pair quotient: the smallest nontrivial index.
    std::int64_t d() const { return d1_; }
    /// Pair quotient only: the second smallest nontrivial index.
    std::int64_t d2() const { return d2_; }
    /// Pair quotient only: the largest nontrivial index.
    std::int64_t d3() const { return d3_; }

    std::string to_string() const;

    auto operator<=>(CurveRef const &) const = default;

  private:
    CurveRef(std::int64_t n, CurveKind kind, std::int64_t d1, std::int64_t d2, std::int64_t d3)
        : n_(n), kind_(kind), d1_(d1), d2_(d2), d3_(d3)
    {
    }

    std::int64_t n_;
    CurveKind kind_;
    std::int64_t d1_ = 0;
    std::int64_t d2_ = 0;
    std::int64_t d3_ = 0;
};

struct GenusData
{
    CurveRef curve;
    std::int64_t genus;
    // Populated for CurveKind::full only.
    std::int64_t nu2 = 0;
    std::int64_t nu3 = 0;
    std::int64_t cusps = 0;
};

std::int64_t cusp_count(Level const & level);

/// g = 1 + psi/12 - nu2/4 - nu3/3 - cusps/2.
GenusData genus_X0(Level const & level);

/*
 * Number of fixed points of w_Q on X0(N), Q || N, Q > 1.
 *
 * CM points: sum over the orders O containing a root of x^2 - t x + Q with
 * t^2 < 4Q and Q | t (discriminants -4Q, -Q when Q = 3 mod 4, plus -4 for
 * Q = 2) of h(O) times the number of local optimal
 * embeddings of O into the Eichler order of level N/Q. Cusps are fixed only
 * for Q = 4, where every cusp of 2-adic denominator exactly 2 is fixed.
 * Memoized per (N, Q).
 */
std::int64_t al_fixed_points(Level const & level, HallDivisor const & q);

/// Riemann-Hurwitz: g' = (2g + 2 - nu(w_d)) / 4.
GenusData genus_single_quotient(Level const & level, HallDivisor const & d);

/// Klein four-group Riemann-Hurwitz: g'' = (2g + 6 - nu(w_a) - nu(w_b) - nu(w_c)) / 8.
GenusData genus_pair_quotient(Level const & level, HallDivisor const & d, HallDivisor const & d2);

GenusData genus(CurveRef const & curve);

} // namespace gonality

#endif
