#pragma once

#include <string>
#include <vector>

#include "parbias/partition.hpp"

namespace parbias {

enum class Family { T1, T2, T3, T4 };

std::string to_string(Family f);

struct DomainTag {
    Family family = Family::T1;
    std::string label;        // subcase identifier, e.g. "G_e,0"
    bool residual = false;    // handled by cardinality comparison, no image
};

struct MappingOutcome {
    bool has_image = false;   // false for residual subcases
    Partition image;
    DomainTag tag;
    std::vector<std::string> trace;  // ordered rule names applied
    bool repaired = false;    // image re-targeted by the collision repair rule
};

struct Collision {
    Partition a;
    Partition b;
    Partition image;
    std::string tag_a;
    std::string tag_b;
};

struct InjectionReport {
    long n = 0;
    Family family = Family::T1;
    long domain_size = 0;
    long image_size = 0;
    long residual_count = 0;
    long repaired_count = 0;
    std::vector<Collision> collisions;
    // (source, offending image)
    std::vector<std::pair<Partition, Partition>> codomain_violations;
    std::vector<std::pair<Partition, Partition>> weight_violations;
    // sources for which no image could be constructed or repaired
    std::vector<Partition> unmapped;

    long violation_count() const {
        return static_cast<long>(codomain_violations.size() +
                                 weight_violations.size() + unmapped.size());
    }
    bool clean() const {
        return collisions.empty() && violation_count() == 0 &&
               image_size == domain_size - residual_count;
    }
};

// Source and target classes of each map family (bias included).
ClassSpec family_domain(Family f);
ClassSpec family_codomain(Family f);

// ---- Theorem 1 (all partitions, even-heavy -> odd-heavy) ----

// Tags: "G_e,0", "G_e,1", "Gbar0_e", residual "A1".."A3" (n even) /
// "B1".."B3" (n odd). Throws std::invalid_argument unless even-heavy.
DomainTag thm1_classify(const Partition& p);

MappingOutcome thm1_f1(const Partition& p);  // domain G_{e,0}
MappingOutcome thm1_f2(const Partition& p);  // domain G_{e,1}
MappingOutcome thm1_f3(const Partition& p);  // domain Gbar0_e

// Classify + dispatch; residual tags give has_image = false.
MappingOutcome thm1_map(const Partition& p);

// ---- Theorems 2-4 dispatchers ----
// These return the final per-n outcome: the natural rule image when it is
// valid and unclaimed, otherwise the deterministically repaired image.
MappingOutcome thm2_map(const Partition& p);  // distinct, even-heavy -> distinct, odd-heavy
MappingOutcome thm3_map(const Partition& p);  // min part 2, odd-heavy -> even-heavy
MappingOutcome thm4_map(const Partition& p);  // no part 2, even-heavy -> odd-heavy

// ---- Theorem 5 (classification only; verified by counting) ----
// Tags: "G_e-dispatchable", "G0_e,1" (third part > 6), "G0_e,2".
DomainTag thm5_classify(const Partition& p);

// Exhaustive per-n audit of one family: applies the dispatcher to every
// member of the source class and checks injectivity, codomain membership,
// and weight preservation. Failures are data, not exceptions.
InjectionReport audit_family(long n, Family family);

// Audit plus all final outcomes, in source enumeration order.
InjectionReport audit_family(long n, Family family,
                             std::vector<std::pair<Partition, MappingOutcome>>* outcomes);

// Expected residual count at n per the source analysis, used by tests:
// T1: closed forms for |P_e \ Gbar_e| (see verify module);
// T2: |H~0_{e,3}(n)| for odd n, 1 at n=2, else 0;
// T3: 1 for n in {3,5} (empty even-heavy codomain), else 0;
// T4: floor((n-3)/4) - 1 for odd n > 23, else 0.
long expected_residual(long n, Family family);

namespace detail {
// Natural (pre-repair) rule applications, exposed for unit fixtures.
MappingOutcome thm2_natural(const Partition& p);
MappingOutcome thm3_natural(const Partition& p);
MappingOutcome thm4_natural(const Partition& p);

// Closed forms for the even-heavy residual census of the first family:
// 1 + two floor sums, for even n >= 2 / odd n >= 5 respectively.
long residual_closed_even(long n);
long residual_closed_odd(long n);
}  // namespace detail

}  // namespace parbias
