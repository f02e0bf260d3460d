#ifndef GONALITY_ENGINE_HPP
#define GONALITY_ENGINE_HPP

#include "gonality/facts.hpp"
#include "gonality/modgenus.hpp"
#include "gonality/rules.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

struct CertificateStep
{
    BoundAssertion assertion;
    std::string anchor;
};

using Certificate = std::vector<CertificateStep>;

struct GonalityState
{
    CurveRef curve;
    std::int64_t genus = 0;
    std::int64_t lowerQ = 1;
    std::int64_t upperQ = unbounded;
    std::int64_t lowerC = 1;
    std::int64_t upperC = unbounded;
    Certificate certificate;

    bool decidedQ() const { return lowerQ == upperQ; }
    bool decidedC() const { return lowerC == upperC; }
    bool decided() const { return decidedQ() && decidedC(); }

    /// Interval comparison only; the certificate is ignored.
    bool same_bounds(GonalityState const & o) const;
};

/// A lower bound met an upper bound from below. Names both steps.
class ContradictionError : public std::runtime_error
{
  public:
    ContradictionError(CurveRef const & curve, CertificateStep const & lower,
                       CertificateStep const & upper);
};

/*
 * Derives gonality intervals for X0(N)/w_d from computed invariants, the
 * rules module and `store`, iterating until nothing tightens (at most 8
 * passes). Every tightening is appended to the certificate.
 */
GonalityState classify(CurveRef const & curve, FactStore const & store);

/*
 * Re-runs, step by step, the rule named in each certificate entry against
 * the state rebuilt so far and checks it reproduces the recorded assertion.
 * Returns the rebuilt state; throws std::logic_error on the first mismatch.
 */
GonalityState replay(CurveRef const & curve, Certificate const & certificate,
                     FactStore const & store);

/// (N, d) with 6 <= N <= nmax, N not a prime power, d a Hall divisor, 1 < d (< N unless
/// include_fricke), ordered by N then d.
std::vector<CurveRef> survey_curves(std::int64_t nmax, bool include_fricke);

/// OpenMP over curves; output order as survey_curves.
std::vector<GonalityState> survey(std::int64_t nmax, FactStore const & store, bool include_fricke);

/// Single-threaded reference for survey.
std::vector<GonalityState> survey_serial(std::int64_t nmax, FactStore const & store,
                                         bool include_fricke);

struct ExpectedRow
{
    std::int64_t n;
    std::int64_t d;
    std::int64_t gonQ;
    std::optional<std::int64_t> gonC;
    int line;
};

enum class Scope { all, fricke, nonfricke };

/// "#! complete gonQ=<v> [genus=<g>] [scope=all|fricke|nonfricke]": the table
/// lists every surveyed curve of that scope decided with that value.
struct Completeness
{
    std::int64_t gonQ = 0;
    std::optional<std::int64_t> genus;
    Scope scope = Scope::all;
};

struct ExpectedTable
{
    std::vector<ExpectedRow> rows;
    std::vector<Completeness> complete;
    std::vector<std::string> notes; // "#! note <text>"
    std::vector<Diagnostic> errors;

    bool ok() const { return errors.empty(); }
    bool has_fricke() const;
    std::int64_t max_level() const;
};

/// Lines N;d;gonQ=<int>[;gonC=<int>]. Prime-power N is rejected.
ExpectedTable parse_expected(std::string_view text);

struct VerifyEntry
{
    std::int64_t n;
    std::int64_t d;
    std::string detail;
};

struct VerifyReport
{
    std::vector<VerifyEntry> matches;
    std::vector<VerifyEntry> mismatches;
    std::vector<VerifyEntry> undecided;
    std::vector<std::string> notes;

    bool passed() const { return mismatches.empty(); }
};

/*
 * Compares states against the table. A row mismatches when the engine's
 * interval excludes the expected value; for each completeness directive, a
 * decided state with that value that the table omits is also a mismatch.
 * Notes collect suspect facts, degree-matching MAP_P1 facts on unlisted
 * curves, and the table's own note lines.
 */
VerifyReport verify(std::vector<GonalityState> const & states, ExpectedTable const & expected,
                    FactStore const & store, std::vector<Diagnostic> const & suspect = {});

} // namespace gonality

#endif
