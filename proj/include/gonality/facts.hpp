#ifndef GONALITY_FACTS_HPP
#define GONALITY_FACTS_HPP

#include "gonality/modgenus.hpp"
#include "gonality/rules.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gonality {

enum class FactKind {
    FP_GON_LB,     // p, lb: no F_p-rational function of degree < lb
    HYPERELLIPTIC, // flag
    TRIGONAL_C,    // flag
    TRIGONAL_Q,    // flag
    BETTI22,       // flag: beta_{2,2} = 0
    MAP_P1,        // degree, field
    GON_KNOWN,     // field, value
};

std::string_view to_string(FactKind kind);
std::optional<FactKind> parse_fact_kind(std::string_view text);

/*
 * One externally computed statement about a curve. Only the payload fields
 * belonging to `kind` are meaningful; the rest stay zero.
 */
struct Fact
{
    CurveRef curve;
    FactKind kind;
    std::int64_t p = 0;
    std::int64_t lb = 0;
    bool flag = false;
    std::int64_t degree = 0;
    Field field = Field::Q;
    std::int64_t value = 0;
    std::string source;
    int line = 0;

    /// FP_GON_LB is keyed by p, MAP_P1 and GON_KNOWN by field.
    std::int64_t head_discriminator() const;
    bool same_payload(Fact const & other) const;
};

std::string serialize(Fact const & fact);

struct Diagnostic
{
    int line;
    std::string message;
};

class FactStore
{
  public:
    FactStore() = default;
    explicit FactStore(std::vector<Fact> facts);

    /// All facts on `curve`, in file order. Empty when nothing is known.
    std::vector<Fact> const & about(CurveRef const & curve) const;

    /// First fact of this kind on `curve`; absent means unknown, not false.
    std::optional<Fact> query(CurveRef const & curve, FactKind kind) const;

    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    /// Canonical text: curves ascending, facts in kind order.
    std::string serialize() const;

    /// Every curve carrying at least one fact, ascending.
    std::vector<CurveRef> curves() const;

  private:
    std::map<CurveRef, std::vector<Fact>> index_;
    std::size_t count_ = 0;
};

struct FactParseResult
{
    FactStore store;
    std::vector<Diagnostic> errors;
    /// Records marked suspect=yes: validated, reported, never loaded.
    std::vector<Diagnostic> suspect;

    bool ok() const { return errors.empty(); }
};

/*
 * Line format: KIND;curve=<spec>;key=value;...;src=<text>
 *   FP_GON_LB      p, lb
 *   HYPERELLIPTIC  value=yes|no     (also TRIGONAL_C, TRIGONAL_Q)
 *   BETTI22        zero=yes|no
 *   MAP_P1         degree, field=Q|C
 *   GON_KNOWN      field=Q|C, value
 * plus optional suspect=yes|no. Blank lines and '#' comments are skipped.
 * All errors are collected with their line numbers.
 */
FactParseResult parse_facts(std::string_view text);

} // namespace gonality

#endif
