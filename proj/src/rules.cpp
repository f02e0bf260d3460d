#include "gonality/rules.hpp"

#include <string>

namespace gonality {

std::string_view to_string(Field field)
{
    return field == Field::Q ? "Q" : "C";
}

std::string_view to_string(BoundKind kind)
{
    return kind == BoundKind::lower ? "lower" : "upper";
}

std::string_view to_string(RuleId rule)
{
    switch (rule) {
    case RuleId::OGG_LP: return "OGG_LP";
    case RuleId::COUNT_LB: return "COUNT_LB";
    case RuleId::EQ1: return "EQ1";
    case RuleId::POONEN_2G2: return "POONEN_2G2";
    case RuleId::POONEN_G: return "POONEN_G";
    case RuleId::POONEN_C: return "POONEN_C";
    case RuleId::POONEN_QUOT_UP: return "POONEN_QUOT_UP";
    case RuleId::POONEN_QUOT_DOWN: return "POONEN_QUOT_DOWN";
    case RuleId::CS_FACTOR: return "CS_FACTOR";
    case RuleId::KIM_SARNAK: return "KIM_SARNAK";
    case RuleId::TOWER: return "TOWER";
    case RuleId::BETTI: return "BETTI";
    case RuleId::GENUS_SMALL: return "GENUS_SMALL";
    case RuleId::FIELD_DESCENT: return "FIELD_DESCENT";
    case RuleId::FACT: return "FACT";
    }
    return "?";
}

std::optional<Field> parse_field(std::string_view text)
{
    if (text == "Q")
        return Field::Q;
    if (text == "C")
        return Field::C;
    return std::nullopt;
}

std::string_view anchor(RuleId rule)
{
    switch (rule) {
    case RuleId::OGG_LP: return "Ogg: #X0(N)(F_p^2) >= L_p(N)";
    case RuleId::COUNT_LB: return "#C(F_q) > d(q+1) => gon_Q(C) > d";
    case RuleId::EQ1: return "L_p(N) > 8(p^2+1) => gon_Q(X0(N)) > 8";
    case RuleId::POONEN_2G2: return "Poonen: gon <= 2g-2";
    case RuleId::POONEN_G: return "Poonen: gon_k <= g when X(k) nonempty";
    case RuleId::POONEN_C: return "Poonen: gon_C <= (g+3)/2";
    case RuleId::POONEN_QUOT_UP: return "Poonen: gon(X) <= deg(pi) gon(Y)";
    case RuleId::POONEN_QUOT_DOWN: return "Poonen: gon(X) >= gon(Y)";
    case RuleId::CS_FACTOR: return "Castelnuovo-Severi: g(X) <= m g(Y) + n g(Z) + (m-1)(n-1)";
    case RuleId::KIM_SARNAK: return "Kim-Sarnak: D_Gamma <= (12000/119) d";
    case RuleId::TOWER: return "Tower theorem: genus >= 10";
    case RuleId::BETTI: return "Green-Lazarsfeld: beta_{2,2} = 0, g >= 5";
    case RuleId::GENUS_SMALL: return "genus <= 3 / genus >= 1";
    case RuleId::FIELD_DESCENT: return "gon_C <= gon_Q; hyperelliptic descent with a rational point";
    case RuleId::FACT: return "external fact";
    }
    return "?";
}

OggBound ogg_Lp(Level const & level, std::int64_t p)
{
    if (!is_prime(p))
        throw domain_error("ogg_Lp: " + std::to_string(p) + " is not prime");
    if (level.divisible_by(p))
        throw domain_error("ogg_Lp: p = " + std::to_string(p) + " divides N = " +
                           std::to_string(level.value()));
    Rational const value = Rational(p - 1, 12) * Rational(level.psi()) +
                           Rational(std::int64_t{1} << level.omega());
    std::int64_t ceiling = value.numerator() / value.denominator();
    if (ceiling * value.denominator() < value.numerator())
        ++ceiling;
    return {value, ceiling};
}

std::int64_t gonality_lb_from_count(std::int64_t count, std::int64_t q)
{
    if (count < 1)
        throw domain_error("gonality_lb_from_count: count must be positive");
    if (q < 2)
        throw domain_error("gonality_lb_from_count: q must be a prime power");
    return 1 + (count - 1) / (q + 1);
}

std::optional<Eq1Witness> eq1_eliminates(Level const & level)
{
    std::int64_t const cutoff = level.psi() / 96 + 2;
    for (std::int64_t p : primes_up_to(cutoff)) {
        if (level.divisible_by(p))
            continue;
        OggBound const lp = ogg_Lp(level, p);
        std::int64_t const rhs = 8 * (p * p + 1);
        if (lp.value > Rational(rhs))
            return Eq1Witness{p, lp, rhs};
    }
    return std::nullopt;
}

std::vector<BoundAssertion> poonen_bounds(CurveRef const & curve, std::int64_t g,
                                          bool has_rational_point)
{
    std::vector<BoundAssertion> out;
    std::vector<Evidence> const inputs{{"g", g}, {"rational_point", has_rational_point ? 1 : 0}};
    if (g >= 2) {
        out.push_back({curve, Field::Q, BoundKind::upper, 2 * g - 2, RuleId::POONEN_2G2, inputs});
        if (has_rational_point)
            out.push_back({curve, Field::Q, BoundKind::upper, g, RuleId::POONEN_G, inputs});
    } else if (has_rational_point) {
        out.push_back({curve, Field::Q, BoundKind::upper, g + 1, RuleId::POONEN_G, inputs});
    }
    out.push_back({curve, Field::C, BoundKind::upper, (g + 3) / 2, RuleId::POONEN_C, inputs});
    return out;
}

std::int64_t cs_bound(std::int64_t m, std::int64_t gY, std::int64_t n, std::int64_t gZ)
{
    if (m < 1 || n < 1)
        throw domain_error("cs_bound: degrees must be positive");
    return m * gY + n * gZ + (m - 1) * (n - 1);
}

std::optional<BoundAssertion> cs_factoring_rule(CurveRef const & x, CurveRef const & y,
                                                std::int64_t gX, std::int64_t gY,
                                                std::int64_t quotient_gonality_lb,
                                                Field field, std::int64_t known_lower)
{
    std::int64_t const rhs = cs_bound(2, gY, 4, 0);
    if (gX <= rhs || quotient_gonality_lb < 3 || known_lower < 4)
        return std::nullopt;
    std::vector<Evidence> inputs{{"gX", gX},
                                 {"gY", gY},
                                 {"cs_rhs", rhs},
                                 {"gonY_lower", quotient_gonality_lb},
                                 {"known_lower", known_lower},
                                 {"Y_d", y.d()},
                                 {"Y_d2", y.d2()}};
    return BoundAssertion{x, field, BoundKind::lower, 5, RuleId::CS_FACTOR, std::move(inputs)};
}

std::optional<BoundAssertion> kim_sarnak_rule(CurveRef const & curve)
{
    std::int64_t const psi = Level(curve.level()).psi();
    if (119 * psi <= 96000)
        return std::nullopt;
    return BoundAssertion{curve, Field::C, BoundKind::lower, 5, RuleId::KIM_SARNAK, {{"psi", psi}}};
}

std::optional<BoundAssertion> tower_rule(CurveRef const & curve, std::int64_t g,
                                         std::int64_t gonQ_lower)
{
    if (g < 10 || gonQ_lower < 5)
        return std::nullopt;
    return BoundAssertion{curve, Field::C, BoundKind::lower, 5, RuleId::TOWER,
                          {{"g", g}, {"gonQ_lower", gonQ_lower}}};
}

std::optional<BoundAssertion> betti_rule(CurveRef const & curve, std::int64_t g, bool betti22_zero)
{
    if (g < 5 || !betti22_zero)
        return std::nullopt;
    return BoundAssertion{curve, Field::C, BoundKind::lower, 5, RuleId::BETTI,
                          {{"g", g}, {"betti22_zero", 1}}};
}

std::vector<BoundAssertion> genus_small(CurveRef const & curve, std::int64_t g)
{
    std::vector<BoundAssertion> out;
    std::vector<Evidence> const inputs{{"g", g}};
    if (g >= 1) {
        out.push_back({curve, Field::Q, BoundKind::lower, 2, RuleId::GENUS_SMALL, inputs});
        out.push_back({curve, Field::C, BoundKind::lower, 2, RuleId::GENUS_SMALL, inputs});
    }
    if (g == 0)
        out.push_back({curve, Field::Q, BoundKind::upper, 1, RuleId::GENUS_SMALL, inputs});
    else if (g <= 3)
        out.push_back({curve, Field::Q, BoundKind::upper, 3, RuleId::GENUS_SMALL, inputs});
    return out;
}

std::int64_t lift_to_quotient(std::int64_t full_lower)
{
    return (full_lower + 1) / 2;
}

} // namespace gonality
