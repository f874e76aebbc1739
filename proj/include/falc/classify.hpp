#pragma once

#include <optional>
#include <string>
#include <vector>

#include "falc/bigreal.hpp"
#include "falc/hypgeom.hpp"

namespace falc {

/// Identifier for M_n or one of its half-twist partners: twists[i] = 1
/// marks the i-th crossing circle as carrying a half-twist.
struct PretzelFal {
    long n;
    std::vector<int> twists;

    /// M_n itself: no half-twists.
    static PretzelFal base(long n);
    /// M'_n = the (0, 1, 1, ..., 1) partner.
    static PretzelFal prime_family(long n);
    /// Bit string like "01101"; length must equal n.
    static PretzelFal parse(long n, const std::string& bits);

    bool is_base() const;
    bool is_prime_family() const;
    std::string twists_string() const;
    void validate() const;
};

// Neumann-Reid admissible short-geodesic lengths for arithmetic link
// complements.  The values live in external published tables and are never
// shipped with the tool; users load them from a JSON file with provenance.
inline const char* kShortGeodesicCutoff = "0.862554627";
inline const char* kAdmissibleLengthCap = "1.9248473002";

struct NrTableEntry {
    std::string length;  // decimal string, exclusive-inclusive range (cutoff, cap]
    long d;              // imaginary quadratic discriminant label
    std::string source;
};

struct NeumannReidTable {
    std::vector<NrTableEntry> entries;
};

enum class ArithRule {
    known_arithmetic,
    degree_rule,
    vinberg_rule,
    geodesic_threshold,
    nr_table_comparison,
};

enum class RuleOutcome {
    decisive_arithmetic,
    decisive_non_arithmetic,
    corroborating_non_arithmetic,
    inconclusive,
    unavailable,
};

struct EvidenceItem {
    ArithRule rule;
    RuleOutcome outcome;
    std::string detail;
    std::optional<std::string> exact_witness;
};

enum class Verdict { arithmetic, non_arithmetic };

struct ArithmeticityVerdict {
    Verdict verdict;
    std::vector<EvidenceItem> evidence;
};

/// Decides arithmeticity of M_n and all of its half-twist partners.
/// n = 3, 4 are arithmetic; n = 6 is excluded by the exact Gram-entry
/// witness -10/3; every other n is excluded because its trace field is
/// not imaginary quadratic.  Short-geodesic evidence is attached as
/// corroboration where the length rules apply.
ArithmeticityVerdict is_arithmetic(long n, const std::optional<NeumannReidTable>& table = std::nullopt,
                                   long prec = kDefaultPrecision);

const char* rule_name(ArithRule r);
const char* outcome_name(RuleOutcome o);
const char* verdict_name(Verdict v);

struct CommensurabilityResult {
    bool commensurable;
    std::string reason;  // short machine code
    std::string detail;  // computed case data
};

/// Two half-twist partners are commensurable iff they have the same number
/// of crossing circles; the reason records which case separated them.
CommensurabilityResult commensurable(const PretzelFal& a, const PretzelFal& b,
                                     long prec = kDefaultPrecision);

enum class ManifoldKind { base, prime_family, other };

struct SymmetryData {
    ManifoldKind kind;
    std::optional<long> sym_plus_order;
    std::optional<long> sym_order;
    bool hidden_infinite = false;
    std::optional<long> hidden_count;
    std::optional<long> cover_degree;  // degree over the minimal orbifold
    std::optional<Real> orbifold_volume_orientable;  // f(n)
    std::optional<Real> orbifold_volume_full;        // f(n)/2
    std::string note;
};

/// Symmetry and hidden-symmetry accounting.  For non-arithmetic M_n:
/// (8n, 16n, 0 hidden); for M'_n with n >= 5: full group of order 8 and 2n
/// hidden symmetries, with 16n = 8 * 2n.  Arithmetic cases are flagged as
/// having infinitely many hidden symmetries.  Other twist patterns get
/// only class-level data.
SymmetryData symmetry_data(const PretzelFal& m, long prec = kDefaultPrecision);

struct HiddenSymmetryBounds {
    Real lower, upper;       // vol / (8(L(pi/4) +/- eps))
    bool contains_two_n;
    long smallest_valid_n;   // least n >= 5 whose bracket contains 2n at this eps
};

/// Volume bracket for the hidden-symmetry count of M'_n; requires n >= 5
/// and 0 < eps < L(pi/4).
HiddenSymmetryBounds hidden_symmetry_bounds(long n, const Real& eps, long prec = kDefaultPrecision);

/// Upper bound vol/v0 on the number of hidden symmetries of any
/// non-arithmetic manifold of the given volume.  v0, the minimal volume of
/// a one-cusped orbifold, must be supplied by the caller (> 0); no default
/// is assumed.
Real max_hidden_symmetries(const Real& vol, const Real& v0);

/// These rules must never both claim decisiveness in opposite directions,
/// and a quadratic-field degree observation may not be cited as decisive.
bool evidence_chain_consistent(const ArithmeticityVerdict& v);

}  // namespace falc
