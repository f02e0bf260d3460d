#ifndef GONALITY_RULES_HPP
#define GONALITY_RULES_HPP

#include "gonality/arith.hpp"
#include "gonality/classnum.hpp"
#include "gonality/modgenus.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

enum class Field { Q, C };
enum class BoundKind { lower, upper };

enum class RuleId {
    OGG_LP,
    COUNT_LB,
    EQ1,
    POONEN_2G2,
    POONEN_G,
    POONEN_C,
    POONEN_QUOT_UP,
    POONEN_QUOT_DOWN,
    CS_FACTOR,
    KIM_SARNAK,
    TOWER,
    BETTI,
    GENUS_SMALL,
    FIELD_DESCENT,
    FACT,
};

std::string_view to_string(Field field);
std::string_view to_string(BoundKind kind);
std::string_view to_string(RuleId rule);
std::optional<Field> parse_field(std::string_view text);

/// Short citation for the statement a rule instantiates.
std::string_view anchor(RuleId rule);

/// Upper bounds start here before any rule fires.
inline constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max();

/// A named integer the rule consumed; enough to re-run the rule by hand.
struct Evidence
{
    std::string name;
    std::int64_t value;

    bool operator==(Evidence const &) const = default;
};

struct BoundAssertion
{
    CurveRef curve;
    Field field;
    BoundKind kind;
    std::int64_t value;
    RuleId rule;
    std::vector<Evidence> inputs;

    bool operator==(BoundAssertion const &) const = default;
};

struct OggBound
{
    Rational value;
    std::int64_t ceiling;
};

/// L_p(N) = ((p-1)/12) psi(N) + 2^omega(N), a lower bound for #X0(N)(F_{p^2}).
OggBound ogg_Lp(Level const & level, std::int64_t p);

/// 1 + floor((count-1)/(q+1)): if #C(F_q) > d(q+1) then gon_Q(C) > d.
std::int64_t gonality_lb_from_count(std::int64_t count, std::int64_t q);

struct Eq1Witness
{
    std::int64_t p;
    OggBound lp;
    std::int64_t rhs; // 8(p^2 + 1)
};

/*
 * Least prime p not dividing N with L_p(N) > 8(p^2 + 1), scanning
 * p <= psi(N)/96 + 2. Past the cutoff 8p^2 >= p(psi/12 + 16), so the right
 * side exceeds L_p(N) whenever 2^omega(N) <= psi/4 + 40, which always holds.
 */
std::optional<Eq1Witness> eq1_eliminates(Level const & level);

/// Upper bounds from genus alone: 2g-2 and g over Q, (g+3)/2 over C.
std::vector<BoundAssertion> poonen_bounds(CurveRef const & curve, std::int64_t g,
                                          bool has_rational_point);

/// m g(Y) + n g(Z) + (m-1)(n-1).
std::int64_t cs_bound(std::int64_t m, std::int64_t gY, std::int64_t n, std::int64_t gZ);

/*
 * X -> Y of degree 2 with g(X) > 2 g(Y) + 3: a degree-4 map X -> P^1 factors
 * through Y, forcing gon(Y) <= 2. With quotient_gonality_lb >= 3 no such map
 * exists. The caller passes its current lower bound for X in `field`; the
 * assertion (lower >= 5) is only emitted once degrees below 4 are already
 * excluded, i.e. known_lower >= 4.
 */
std::optional<BoundAssertion> cs_factoring_rule(CurveRef const & x, CurveRef const & y,
                                                std::int64_t gX, std::int64_t gY,
                                                std::int64_t quotient_gonality_lb,
                                                Field field, std::int64_t known_lower);

/// 119 psi(N) > 96000: no involution quotient of X0(N) is C-tetragonal.
std::optional<BoundAssertion> kim_sarnak_rule(CurveRef const & curve);

/// g >= 10 and gon_Q >= 5 give gon_C >= 5.
std::optional<BoundAssertion> tower_rule(CurveRef const & curve, std::int64_t g,
                                         std::int64_t gonQ_lower);

/// g >= 5 and beta_{2,2} = 0 give gon_C >= 5.
std::optional<BoundAssertion> betti_rule(CurveRef const & curve, std::int64_t g,
                                         bool betti22_zero);

/// lower >= 2 on both fields for g >= 1; upper Q <= 3 for g <= 3; upper Q <= 1 for g = 0.
std::vector<BoundAssertion> genus_small(CurveRef const & curve, std::int64_t g);

/// gon(X0(N)) <= 2 gon(X) for every involution quotient X.
std::int64_t lift_to_quotient(std::int64_t full_lower);

} // namespace gonality

#endif
