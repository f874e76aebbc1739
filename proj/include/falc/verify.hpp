#pragma once

#include <string>
#include <vector>

#include "falc/bigreal.hpp"

namespace falc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Verification suites.  Each check is self-contained, pins its tolerance
/// in code, and reports a one-line outcome.  Oracles used here (direct
/// quadrature of the defining integral, exhaustive involution and
/// automorphism enumeration, gcd-count totients) are independent of the
/// implementation paths they test.
std::vector<CheckResult> verify_fields(long prec = kDefaultPrecision);
std::vector<CheckResult> verify_geometry(long prec = kDefaultPrecision);
std::vector<CheckResult> verify_graphs();
std::vector<CheckResult> verify_symmetry(long prec = kDefaultPrecision);

/// "fields", "geometry", "graphs", "symmetry" or "all".
std::vector<CheckResult> verify_suite(const std::string& suite, long prec = kDefaultPrecision);

/// Direct tanh-sinh quadrature of -integral_0^theta ln|2 sin x| dx,
/// requires 0 < theta < pi.  Exposed for the test suites.
Real lobachevsky_quadrature(const Real& theta, long prec);

}  // namespace falc
