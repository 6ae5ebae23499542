#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace parbias {

// Length-parity bias of a partition: more odd parts, more even parts, or tied.
enum class Bias { OddHeavy, EvenHeavy, Balanced, All };

std::string to_string(Bias b);

// A partition of a non-negative integer: parts stored non-increasing.
// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    // Canonicalizes (sorts non-increasing). Throws std::invalid_argument on
    // non-positive entries.
    static Partition from_parts(std::vector<int> raw);

    // Trusted constructor for callers that already hold a canonical sequence.
    static Partition from_sorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long n() const { return n_; }
    int len() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based indexing as in lambda_1 >= lambda_2 >= ...; 0 past the end.
    int part(int i) const {
        return (i >= 1 && i <= len()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    int mult(int value) const;
    bool distinct() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Lexicographic on the part sequence; used for deterministic ordering.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(5,2,1,1)", "()" for empty

private:
    std::vector<int> parts_;
    long n_ = 0;
};

struct PartitionStats {
    long n = 0;
    int len = 0;
    int len_even = 0;
    int len_odd = 0;
    int largest = 0;
    int len_odd_gt1 = 0;  // odd parts strictly greater than 1
    std::vector<std::pair<int, int>> mults;  // (value, multiplicity), value descending
};

PartitionStats stats(const Partition& p);

// Even / odd parts, each non-increasing.
std::vector<int> even_parts(const Partition& p);
std::vector<int> odd_parts(const Partition& p);

// Multiset union of parts.
Partition union_of(const Partition& a, const Partition& b);

// (even component, odd component); union_of of the two gives back p.
std::pair<Partition, Partition> split(const Partition& p);

Bias bias_class(const Partition& p);

// len_odd - len_even; positive means odd-heavy.
int bias_diff(const Partition& p);

// Declarative restriction class covering every set used in the source
// definitions: distinct parts, minimum part, forbidden part values, and a
// bias selector.
struct ClassSpec {
    bool distinct = false;
    int min_part = 1;
    std::vector<int> forbidden;  // kept sorted ascending, deduplicated
    Bias bias = Bias::All;

    ClassSpec with_bias(Bias b) const {
        ClassSpec s = *this;
        s.bias = b;
        return s;
    }

    bool part_allowed(int v) const;

    // Canonical textual encoding (bias excluded): "d:<0|1>;m:<min>;f:<v,...>"
    std::string key() const;

    static ClassSpec P() { return {}; }
    static ClassSpec Pd() { return {true, 1, {}, Bias::All}; }
    static ClassSpec Q() { return {false, 2, {}, Bias::All}; }
    static ClassSpec DQ() { return {true, 2, {}, Bias::All}; }
    static ClassSpec avoiding(std::vector<int> s);  // P^S

    bool operator==(const ClassSpec& o) const {
        return distinct == o.distinct && min_part == o.min_part &&
               forbidden == o.forbidden && bias == o.bias;
    }
};

ClassSpec normalized(ClassSpec spec);

bool satisfies(const Partition& p, const ClassSpec& spec);

// Visits every partition of n satisfying spec exactly once, in
// lexicographically decreasing part-sequence order. Return false from the
// visitor to stop early.
void enumerate(long n, const ClassSpec& spec,
               const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_all(long n, const ClassSpec& spec);

}  // namespace parbias
