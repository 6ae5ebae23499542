#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "parbias/partition.hpp"

namespace parbias {

// Exact tallies of the partitions of n in one restriction class, split by
// length-parity bias.
struct BiasCount {
    long n = 0;
    mpz_class odd_heavy = 0;
    mpz_class even_heavy = 0;
    mpz_class balanced = 0;

    mpz_class total() const { return odd_heavy + even_heavy + balanced; }
    const mpz_class& pick(Bias b) const;

    bool operator==(const BiasCount& o) const {
        return n == o.n && odd_heavy == o.odd_heavy &&
               even_heavy == o.even_heavy && balanced == o.balanced;
    }
};

// Dense table of BiasCount rows for n = 0..n_max. The spec's bias field is
// ignored for storage; all three tallies are kept.
struct CountTable {
    ClassSpec spec;
    std::vector<BiasCount> rows;  // rows[n].n == n

    long n_max() const { return static_cast<long>(rows.size()) - 1; }
    bool operator==(const CountTable& o) const {
        return spec.key() == o.spec.key() && rows == o.rows;
    }
};

// Exhaustive oracle: tallies bias_class over enumerate(n, spec/ALL).
BiasCount count_by_enumeration(long n, const ClassSpec& spec);

// Dynamic program over (remaining weight, odd-minus-even part count).
// Row n is independent of n_max.
CountTable count_by_dp(long n_max, const ClassSpec& spec);

// Classical p(n) for n = 0..n_max via the pentagonal-number recurrence.
// Independent of the enumeration and DP code paths.
std::vector<mpz_class> pentagonal_partition_numbers(long n_max);

// Line-oriented text cache, one file per class key under `dir`.
// Returns false if the location is unwritable.
bool cache_store(const CountTable& table, const std::string& dir);

// Loads the cached table for spec, or nullopt on miss. Corrupt or
// version-mismatched files yield nullopt and, when `warning` is non-null, a
// human-readable reason.
std::optional<CountTable> cache_load(const ClassSpec& spec,
                                     const std::string& dir,
                                     std::string* warning = nullptr);

std::string cache_file_path(const ClassSpec& spec, const std::string& dir);

}  // namespace parbias
