#ifndef ARFCALC_ORACLE_HPP
#define ARFCALC_ORACLE_HPP

#include "arfcalc/gf2.hpp"
#include "arfcalc/matrix.hpp"
#include "arfcalc/rng.hpp"

#include <string>

namespace arfcalc::oracle {

/// Democratic count: the Arf invariant is 0 iff v -> v psi v^t vanishes
/// on strictly more than half of all 2^n vectors. n <= 16.
int arf_democratic(const GF2Form& f);

enum class QGroup { q0zx, q3zx, q0z, q3z };
QGroup qgroup_from_string(const std::string& name);
std::string qgroup_name(QGroup g);

/// Random element of the denominator subgroup of the given Q-group
/// presentation, expanded with arithmetic independent of the main
/// matrix routines.
Mat sample_denominator(QGroup g, Rng& rng, int deg_bound, long long coeff_bound);
/// Random element of the numerator set.
Mat sample_numerator(QGroup g, Rng& rng, int deg_bound, long long coeff_bound);

struct Report {
    std::string suite;
    uint64_t seed = 0;
    long long trials = 0;
    long long failures = 0;
    std::string counterexample; // serialized first failure, empty if none

    bool passed() const { return failures == 0; }
    std::string summary() const;
};

/// Seeded well-definedness drive: denominator elements reduce to zero,
/// numerator shifts by denominators are class-invariant, reduction is
/// additive on numerator pairs.
Report verify_reduction(QGroup g, long long trials, uint64_t seed);

/// Exhaustive small-window checks for the Q_3 reduction over Z[x]:
/// denominator annihilation over all symmetric L with entries of degree
/// <= deg_bound and coefficients in [lo, hi], additivity on seeded pairs
/// from the window, and surjectivity of the preimage formula for all
/// targets of degree <= target_deg. Throws if the window exceeds the
/// instance budget.
Report exhaustive_q3_truncated(int deg_bound, long long lo, long long hi, int target_deg,
                               long long budget = 1000000);

} // namespace arfcalc::oracle

#endif
