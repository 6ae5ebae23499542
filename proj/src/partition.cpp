#include "parbias/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace parbias {

std::string to_string(Bias b) {
    switch (b) {
        case Bias::OddHeavy: return "odd_heavy";
        case Bias::EvenHeavy: return "even_heavy";
        case Bias::Balanced: return "balanced";
        case Bias::All: return "all";
    }
    return "?";
}

Partition Partition::from_parts(std::vector<int> raw) {
    for (int v : raw) {
        if (v < 1) throw std::invalid_argument("partition parts must be >= 1");
    }
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    return from_sorted(std::move(raw));
}

Partition Partition::from_sorted(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    long n = 0;
    for (int v : p.parts_) n += v;
    p.n_ = n;
    return p;
}

int Partition::mult(int value) const {
    int c = 0;
    for (int v : parts_) {
        if (v == value) ++c;
        else if (v < value) break;
    }
    return c;
}

bool Partition::distinct() const {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] == parts_[i - 1]) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

PartitionStats stats(const Partition& p) {
    PartitionStats st;
    st.n = p.n();
    st.len = p.len();
    st.largest = p.largest();
    for (int v : p.parts()) {
        if (v % 2 == 0) {
            ++st.len_even;
        } else {
            ++st.len_odd;
            if (v > 1) ++st.len_odd_gt1;
        }
        if (!st.mults.empty() && st.mults.back().first == v) {
            ++st.mults.back().second;
        } else {
            st.mults.emplace_back(v, 1);
        }
    }
    return st;
}

std::vector<int> even_parts(const Partition& p) {
    std::vector<int> r;
    for (int v : p.parts())
        if (v % 2 == 0) r.push_back(v);
    return r;
}

std::vector<int> odd_parts(const Partition& p) {
    std::vector<int> r;
    for (int v : p.parts())
        if (v % 2 == 1) r.push_back(v);
    return r;
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
               b.parts().end(), std::back_inserter(merged), std::greater<int>());
    return Partition::from_sorted(std::move(merged));
}

std::pair<Partition, Partition> split(const Partition& p) {
    return {Partition::from_sorted(even_parts(p)),
            Partition::from_sorted(odd_parts(p))};
}

int bias_diff(const Partition& p) {
    int d = 0;
    for (int v : p.parts()) d += (v % 2 == 1) ? 1 : -1;
    return d;
}

Bias bias_class(const Partition& p) {
    int d = bias_diff(p);
    if (d > 0) return Bias::OddHeavy;
    if (d < 0) return Bias::EvenHeavy;
    return Bias::Balanced;
}

bool ClassSpec::part_allowed(int v) const {
    if (v < min_part) return false;
    return !std::binary_search(forbidden.begin(), forbidden.end(), v);
}

std::string ClassSpec::key() const {
    std::string s = "d:";
    s += distinct ? '1' : '0';
    s += ";m:" + std::to_string(min_part) + ";f:";
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(forbidden[i]);
    }
    return s;
}

ClassSpec ClassSpec::avoiding(std::vector<int> s) {
    ClassSpec spec;
    spec.forbidden = std::move(s);
    return normalized(spec);
}

ClassSpec normalized(ClassSpec spec) {
    std::sort(spec.forbidden.begin(), spec.forbidden.end());
    spec.forbidden.erase(
        std::unique(spec.forbidden.begin(), spec.forbidden.end()),
        spec.forbidden.end());
    return spec;
}

bool satisfies(const Partition& p, const ClassSpec& spec) {
    if (spec.distinct && !p.distinct()) return false;
    for (int v : p.parts())
        if (!spec.part_allowed(v)) return false;
    if (spec.bias != Bias::All && bias_class(p) != spec.bias) return false;
    return true;
}

namespace {

struct Enumerator {
    const ClassSpec& spec;
    const std::function<bool(const Partition&)>& visit;
    std::vector<int> cur;
    bool stopped = false;

    // diff tracks (odd parts - even parts) of cur.
    void rec(long remaining, int max_part, int diff) {
        if (stopped) return;
        if (remaining == 0) {
            bool ok = spec.bias == Bias::All ||
                      (spec.bias == Bias::OddHeavy && diff > 0) ||
                      (spec.bias == Bias::EvenHeavy && diff < 0) ||
                      (spec.bias == Bias::Balanced && diff == 0);
            if (ok && !visit(Partition::from_sorted(cur))) stopped = true;
            return;
        }
        int hi = static_cast<int>(std::min<long>(remaining, max_part));
        for (int v = hi; v >= spec.min_part; --v) {
            if (!spec.part_allowed(v)) continue;
            cur.push_back(v);
            rec(remaining - v, spec.distinct ? v - 1 : v,
                diff + (v % 2 == 1 ? 1 : -1));
            cur.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate(long n, const ClassSpec& spec,
               const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    ClassSpec norm = normalized(spec);
    Enumerator e{norm, visit, {}, false};
    int cap = n > 0 ? static_cast<int>(n) : 0;
    if (n == 0) {
        Partition empty;
        bool ok = norm.bias == Bias::All || norm.bias == Bias::Balanced;
        if (ok) visit(empty);
        return;
    }
    e.rec(n, cap, 0);
}

std::vector<Partition> enumerate_all(long n, const ClassSpec& spec) {
    std::vector<Partition> out;
    enumerate(n, spec, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

}  // namespace parbias
