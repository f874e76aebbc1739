#include "falc/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "falc/crushtacean.hpp"
#include "falc/tracefield.hpp"

namespace falc {

PretzelFal PretzelFal::base(long n) {
    PretzelFal m{n, std::vector<int>(n, 0)};
    m.validate();
    return m;
}

PretzelFal PretzelFal::prime_family(long n) {
    PretzelFal m{n, std::vector<int>(n, 1)};
    m.twists[0] = 0;
    m.validate();
    return m;
}

PretzelFal PretzelFal::parse(long n, const std::string& bits) {
    if (static_cast<long>(bits.size()) != n)
        throw std::invalid_argument("twist string must have length n");
    PretzelFal m{n, {}};
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("twist string must be over {0,1}");
        m.twists.push_back(c - '0');
    }
    m.validate();
    return m;
}

bool PretzelFal::is_base() const {
    return std::all_of(twists.begin(), twists.end(), [](int t) { return t == 0; });
}

bool PretzelFal::is_prime_family() const {
    if (twists.empty() || twists[0] != 0) return false;
    return std::all_of(twists.begin() + 1, twists.end(), [](int t) { return t == 1; });
}

std::string PretzelFal::twists_string() const {
    std::string s;
    for (int t : twists) s += char('0' + t);
    return s;
}

void PretzelFal::validate() const {
    if (n < 3) throw std::invalid_argument("pretzel FAL requires n >= 3 crossing circles");
    if (static_cast<long>(twists.size()) != n)
        throw std::invalid_argument("twist vector length must equal n");
    for (int t : twists)
        if (t != 0 && t != 1) throw std::invalid_argument("twists must be 0 or 1");
}

const char* rule_name(ArithRule r) {
    switch (r) {
        case ArithRule::known_arithmetic: return "known-arithmetic";
        case ArithRule::degree_rule: return "degree-rule";
        case ArithRule::vinberg_rule: return "vinberg-rule";
        case ArithRule::geodesic_threshold: return "geodesic-threshold";
        case ArithRule::nr_table_comparison: return "length-table-comparison";
    }
    return "?";
}

const char* outcome_name(RuleOutcome o) {
    switch (o) {
        case RuleOutcome::decisive_arithmetic: return "decisive-arithmetic";
        case RuleOutcome::decisive_non_arithmetic: return "decisive-non-arithmetic";
        case RuleOutcome::corroborating_non_arithmetic: return "corroborating-non-arithmetic";
        case RuleOutcome::inconclusive: return "inconclusive";
        case RuleOutcome::unavailable: return "unavailable";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    return v == Verdict::arithmetic ? "arithmetic" : "non-arithmetic";
}

ArithmeticityVerdict is_arithmetic(long n, const std::optional<NeumannReidTable>& table, long prec) {
    if (n < 3) throw std::invalid_argument("is_arithmetic requires n >= 3");
    ArithmeticityVerdict out;
    const long phi = euler_totient(n);

    if (n == 3 || n == 4) {
        out.verdict = Verdict::arithmetic;
        out.evidence.push_back(
            {ArithRule::known_arithmetic, RuleOutcome::decisive_arithmetic,
             "the chain complements with n = 3, 4 crossing circles are classically arithmetic "
             "(reflection group of the polyhedron is arithmetic)",
             std::nullopt});
        return out;
    }

    out.verdict = Verdict::non_arithmetic;
    if (phi == 2) {  // n = 6: the trace field is imaginary quadratic, so use the Gram entry
        out.evidence.push_back({ArithRule::degree_rule, RuleOutcome::inconclusive,
                                "phi(" + std::to_string(n) +
                                    ") = 2: the invariant trace field is imaginary quadratic, "
                                    "so the degree test cannot exclude arithmeticity",
                                std::nullopt});
        auto vr = vinberg_entry_is_integral(n);
        if (vr.integral)
            throw std::logic_error("is_arithmetic: expected a non-integral Gram entry for n = 6");
        auto gd = geodesic_data(n, prec);
        std::string entry = gd.gram_entry_rational ? gd.gram_entry_rational->str()
                                                   : ("root of " + vr.witness.str());
        out.evidence.push_back({ArithRule::vinberg_rule, RuleOutcome::decisive_non_arithmetic,
                                "Gram matrix entry " + entry +
                                    " of the reflection polyhedron is not an algebraic integer",
                                entry});
    } else {
        out.evidence.push_back({ArithRule::degree_rule, RuleOutcome::decisive_non_arithmetic,
                                "phi(" + std::to_string(n) + ") = " + std::to_string(phi) +
                                    " != 2: the invariant trace field is not imaginary quadratic",
                                std::nullopt});
    }

    // short-geodesic corroboration
    const Real len = geodesic_data(n, prec).closed_length;
    const Real cutoff = Real::parse(kShortGeodesicCutoff, prec);
    const Real cap = Real::parse(kAdmissibleLengthCap, prec);
    if (len < cutoff) {
        out.evidence.push_back({ArithRule::geodesic_threshold,
                                RuleOutcome::corroborating_non_arithmetic,
                                "closed geodesic of length " + len.str(20) + " < " +
                                    kShortGeodesicCutoff + " cannot occur in an arithmetic link complement",
                                std::nullopt});
    } else if (len <= cap) {
        if (table && table->entries.empty()) {
            out.evidence.push_back({ArithRule::nr_table_comparison, RuleOutcome::unavailable,
                                    "corroboration unavailable: loaded table has no entries",
                                    std::nullopt});
        } else if (table) {
            const Real tol = Real::parse("1e-8", prec);
            bool matched = false;
            std::string closest;
            for (const auto& e : table->entries) {
                const Real v = Real::parse(e.length, prec);
                if ((len - v).abs() < tol) {
                    matched = true;
                    closest = e.length;
                    break;
                }
            }
            if (!matched)
                out.evidence.push_back({ArithRule::nr_table_comparison,
                                        RuleOutcome::corroborating_non_arithmetic,
                                        "geodesic length " + len.str(20) +
                                            " matches no admissible arithmetic length in the loaded table",
                                        std::nullopt});
            else
                out.evidence.push_back({ArithRule::nr_table_comparison, RuleOutcome::inconclusive,
                                        "geodesic length " + len.str(20) +
                                            " is close to the admissible value " + closest +
                                            "; the length comparison does not corroborate",
                                        std::nullopt});
        } else {
            out.evidence.push_back({ArithRule::nr_table_comparison, RuleOutcome::unavailable,
                                    "corroboration unavailable: external table not loaded",
                                    std::nullopt});
        }
    }
    return out;
}

bool evidence_chain_consistent(const ArithmeticityVerdict& v) {
    if (v.evidence.empty()) return false;
    bool some_arith = false, some_non = false;
    for (const auto& e : v.evidence) {
        if (e.outcome == RuleOutcome::decisive_arithmetic) some_arith = true;
        if (e.outcome == RuleOutcome::decisive_non_arithmetic ||
            e.outcome == RuleOutcome::corroborating_non_arithmetic)
            some_non = true;
        // a quadratic degree observation is never decisive by itself
        if (e.rule == ArithRule::degree_rule && e.outcome == RuleOutcome::decisive_arithmetic)
            return false;
    }
    if (some_arith && some_non) return false;
    if (v.verdict == Verdict::arithmetic && !some_arith) return false;
    if (v.verdict == Verdict::non_arithmetic &&
        std::none_of(v.evidence.begin(), v.evidence.end(), [](const EvidenceItem& e) {
            return e.outcome == RuleOutcome::decisive_non_arithmetic;
        }))
        return false;
    return true;
}

CommensurabilityResult commensurable(const PretzelFal& a, const PretzelFal& b, long prec) {
    a.validate();
    b.validate();
    if (a.n == b.n) {
        auto g = EmbeddedGraph::pretzel_crushtacean(a.n);
        const bool ca = cdw_criterion(g, a.twists).commensurable_with_reflection_orbifold;
        const bool cb = cdw_criterion(g, b.twists).commensurable_with_reflection_orbifold;
        if (!ca || !cb)
            throw std::logic_error("commensurable: involution criterion failed on a pretzel crushtacean");
        return {true, "common-reflection-orbifold",
                "both manifolds satisfy the crushtacean involution criterion, so each is "
                "commensurable with the reflection orbifold of the common polyhedron"};
    }
    const auto va = is_arithmetic(a.n, std::nullopt, prec).verdict;
    const auto vb = is_arithmetic(b.n, std::nullopt, prec).verdict;
    if (va != vb)
        return {false, "arithmetic-mismatch",
                "n = " + std::to_string(va == Verdict::arithmetic ? a.n : b.n) +
                    " is arithmetic while the other is not; arithmeticity is a "
                    "commensurability invariant"};
    if (va == Verdict::arithmetic) {
        auto dm = build_trace_field(a.n);
        auto dn = build_trace_field(b.n);
        return {false, "distinct-trace-fields",
                "invariant trace fields differ: " + dm.min_poly.str() + " vs " + dn.min_poly.str()};
    }
    const Real fa = orbifold_volume_f(a.n, prec);
    const Real fb = orbifold_volume_f(b.n, prec);
    return {false, "minimal-orbifold-volume",
            "minimal orbifold volumes differ: f(" + std::to_string(a.n) + ") = " + fa.str(30) +
                ", f(" + std::to_string(b.n) + ") = " + fb.str(30)};
}

SymmetryData symmetry_data(const PretzelFal& m, long prec) {
    m.validate();
    const long n = m.n;
    SymmetryData out;
    out.kind = m.is_base()           ? ManifoldKind::base
               : m.is_prime_family() ? ManifoldKind::prime_family
                                     : ManifoldKind::other;
    const bool arithmetic = (n == 3 || n == 4);

    if (arithmetic) {
        out.hidden_infinite = true;
        out.note =
            "arithmetic: the commensurator is dense, the manifold has infinitely many hidden "
            "symmetries and no minimal orbifold";
        return out;
    }

    out.orbifold_volume_orientable = orbifold_volume_f(n, prec);
    out.orbifold_volume_full = *out.orbifold_volume_orientable / Real::of(2, prec);

    switch (out.kind) {
        case ManifoldKind::base:
            out.sym_plus_order = 8 * n;
            out.sym_order = 16 * n;
            out.hidden_count = 0;
            out.cover_degree = 16 * n;
            if (n == 6)
                out.note =
                    "symmetry group order 96 agrees with the independently computed value for the "
                    "six-circle chain (48 orientation-preserving)";
            break;
        case ManifoldKind::prime_family:
            // n >= 5 here: n = 3, 4 returned above
            out.sym_order = 8;  // (Z/2Z)^3
            out.hidden_count = 2 * n;
            out.cover_degree = 16 * n;
            break;
        case ManifoldKind::other:
            out.note =
                "symmetry and hidden-symmetry counts are not determined for this twist pattern; "
                "volume, trace field and commensurability class still apply";
            break;
    }
    return out;
}

HiddenSymmetryBounds hidden_symmetry_bounds(long n, const Real& eps, long prec) {
    if (n < 5) throw std::invalid_argument("hidden_symmetry_bounds requires n >= 5");
    const Real L = lobachevsky(Real::pi(prec) / Real::of(4, prec), prec);
    if (!(eps > Real(prec)) || !(eps < L))
        throw std::invalid_argument("hidden_symmetry_bounds: eps must lie in (0, L(pi/4))");
    const Real vol = volume(n, prec);
    const Real eight = Real::of(8, prec);
    HiddenSymmetryBounds out{vol / (eight * (L + eps)), vol / (eight * (L - eps)), false, 0};
    const Real two_n = Real::of(2 * n, prec);
    out.contains_two_n = out.lower <= two_n && two_n <= out.upper;

    // the bracket contains 2k iff f(k)/2 >= L - eps, and f is increasing
    const Real two = Real::of(2, prec);
    for (long k = 5;; ++k) {
        if (orbifold_volume_f(k, prec) / two >= L - eps) {
            out.smallest_valid_n = k;
            break;
        }
        if (k > 1'000'000) throw std::logic_error("hidden_symmetry_bounds: threshold scan diverged");
    }
    return out;
}

Real max_hidden_symmetries(const Real& vol, const Real& v0) {
    if (v0.sign() <= 0)
        throw std::invalid_argument(
            "max_hidden_symmetries: v0 (minimal one-cusped orbifold volume) must be supplied and "
            "positive; no default constant is assumed");
    if (vol.sign() <= 0) throw std::invalid_argument("max_hidden_symmetries: volume must be positive");
    return vol / v0;
}

}  // namespace falc
