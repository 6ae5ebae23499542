#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parbias/maps.hpp"
#include "parbias/partition.hpp"

namespace parbias::detail {

// Collects image parts produced by a rule. build() fails (nullopt) if any
// part is negative, or zero when zeros are not explicitly allowed; rules
// treat that as "construction impossible" and fall through to repair.
class ImageBuilder {
public:
    ImageBuilder& add(int v) {
        parts_.push_back(v);
        return *this;
    }
    ImageBuilder& add(const std::vector<int>& vs) {
        parts_.insert(parts_.end(), vs.begin(), vs.end());
        return *this;
    }
    ImageBuilder& add_rep(int v, long count) {
        for (long i = 0; i < count; ++i) parts_.push_back(v);
        return *this;
    }
    std::optional<Partition> build(bool drop_zeros = false) const {
        std::vector<int> out;
        out.reserve(parts_.size());
        for (int v : parts_) {
            if (v == 0 && drop_zeros) continue;
            if (v < 1) return std::nullopt;
            out.push_back(v);
        }
        return Partition::from_parts(std::move(out));
    }

private:
    std::vector<int> parts_;
};

inline MappingOutcome outcome(Family fam, std::string label, Partition image,
                              std::vector<std::string> trace) {
    MappingOutcome o;
    o.has_image = true;
    o.image = std::move(image);
    o.tag = DomainTag{fam, std::move(label), false};
    o.trace = std::move(trace);
    return o;
}

inline MappingOutcome residual(Family fam, std::string label) {
    MappingOutcome o;
    o.has_image = false;
    o.tag = DomainTag{fam, std::move(label), true};
    o.trace = {"residual (cardinality comparison)"};
    return o;
}

// Construction fell outside the rule's guards; the audit pipeline will
// attempt the deterministic repair search.
inline MappingOutcome unconstructed(Family fam, std::string label,
                                    std::string why) {
    MappingOutcome o;
    o.has_image = false;
    o.tag = DomainTag{fam, std::move(label), false};
    o.trace = {std::move(why)};
    return o;
}

// Slice of a vector, 1-based inclusive indices, clamped.
inline std::vector<int> slice1(const std::vector<int>& v, int lo, int hi) {
    std::vector<int> out;
    if (lo < 1) lo = 1;
    for (int i = lo; i <= hi && i <= static_cast<int>(v.size()); ++i)
        out.push_back(v[static_cast<std::size_t>(i - 1)]);
    return out;
}

inline std::vector<int> add_each(std::vector<int> v, int delta) {
    for (int& x : v) x += delta;
    return v;
}

// Shared parity-flip core of the theorem 1 maps, also reused in mirrored
// form: +1 to every minority-parity part, +1 to the first k-r majority
// parts, -1 to the last r.
MappingOutcome f1_core(const Partition& p, Family fam, bool even_majority);
MappingOutcome f2_core(const Partition& p, Family fam, bool even_majority);

// Final outcome for one source partition, computed by running the full
// per-n two-phase pipeline (see maps_audit.cpp).
MappingOutcome family_map_via_audit(const Partition& p, Family fam);

}  // namespace parbias::detail
