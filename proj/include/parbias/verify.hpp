#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "parbias/counting.hpp"
#include "parbias/partition.hpp"

namespace parbias {

enum class Method { Enum, Dp, Both };

Method method_from_string(const std::string& s);  // "enum" | "dp" | "both"
std::string to_string(Method m);

// One exact comparison. `asserted` is false where the source makes no claim
// (outside the stated range); such records are descriptive only. `skipped`
// marks sub-claims that do not apply at this n (e.g. parity mismatch).
struct VerdictRecord {
    std::string claim;
    long n = 0;
    bool holds = false;
    bool asserted = true;
    bool skipped = false;
    mpz_class lhs = 0;
    mpz_class rhs = 0;
    mpz_class margin = 0;  // lhs - rhs
    std::string note;
};

// Bias inequalities for the five counted classes, claim ids "T1".."T5".
// method=Both recomputes by enumeration and aborts (std::runtime_error) if
// the two backends disagree; an internal inconsistency outranks any verdict.
std::vector<VerdictRecord> verify_bias(const std::string& claim_id, long n_lo,
                                       long n_hi, Method method);

// Floor-sum inequalities, claim ids "L1" (even n >= 14), "L2" (odd n >= 9).
// Throws std::invalid_argument on inapplicable n.
VerdictRecord verify_lemma(const std::string& claim_id, long n);

// The appendix bound chain at integer m >= 7, cross-multiplied to integers:
// "LB.sum_lower" (4*sum > m^2-7m+12), "LB.sum_upper" (6*expr < m^2+3m-3),
// "LB.quad" (3(m^2-7m+12) > 2(m^2+3m-3), asserted only for m >= 26).
std::vector<VerdictRecord> verify_lemma_bound(long m);

// Closed-form cardinalities and bounds at n, each checked against a direct
// enumeration of the set it counts; inapplicable sub-claims are skipped.
std::vector<VerdictRecord> verify_cardinality(long n);

// Exploration: per-m sign pattern for the distinct min-part-2 class,
// dq_o(2m) > dq_e(2m) and dq_o(2m+1) < dq_e(2m+1); asserted for m > 6, the
// odd side additionally for m in {4,5}.
std::vector<VerdictRecord> explore_problem1(long m_lo, long m_hi);

// Horizon-limited threshold candidate for the class avoiding {k} (bias
// odd > even) or {1,k} (bias even > odd).
struct ThresholdReport {
    int k = 0;
    bool with_one = false;
    long horizon = 0;
    long candidate = 0;  // largest violating n <= horizon; 0 when none
    bool tail_all_holds = false;
    std::vector<VerdictRecord> trail;  // the violating n, ascending
    std::string stamp;                 // always "candidate, horizon-limited"
};

// Requires k > 2 (k = 2 is already settled for all n) and horizon >= 50.
ThresholdReport explore_threshold(int k, bool with_one, long horizon);

}  // namespace parbias
