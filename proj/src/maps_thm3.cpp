#include <algorithm>
#include <stdexcept>

#include "maps_util.hpp"
#include "parbias/maps.hpp"

namespace parbias {

using detail::ImageBuilder;
using detail::outcome;
using detail::residual;
using detail::slice1;
using detail::unconstructed;

namespace {

// remove one occurrence of `value` from a descending parts vector
std::vector<int> minus_one(std::vector<int> v, int value) {
    auto it = std::find(v.begin(), v.end(), value);
    if (it != v.end()) v.erase(it);
    return v;
}

MappingOutcome psi4(const Partition& p) {
    const int l1 = p.part(1), l2 = p.part(2);
    const int r = p.mult(2);
    if (l2 % 2 == 1 && p.len() <= 5) {
        // forms: (l1,l2,4), (l1,l2,4,4,3), (l1,l2,4,3,2)
        const bool bare = p.len() == 3;
        const int y = bare ? 0 : (p.part(5) == 3 ? 4 : 2);
        ImageBuilder b;
        if (l1 > 2 * l2 + 3) {
            const bool mod0 = (l1 - l2) % 4 == 0;
            const int h = (l1 + l2 - (mod0 ? 12 : 14)) / 2;
            b.add(6).add(6).add(mod0 ? 4 : 6).add(h).add(h);
            if (!bare) b.add(y).add(3);
            auto img = b.build();
            if (!img) return unconstructed(Family::T3, "I1_o,2_4,1a", "psi4,1a failed");
            return outcome(Family::T3, "I1_o,2_4,1a", *img, {"psi4,1 range a"});
        }
        if (l1 >= l2 + 8) {
            b.add(l1 - l2 - 4).add(4).add(4).add(l2).add(l2);
            if (!bare) b.add(3).add(y);
            auto img = b.build();
            if (!img) return unconstructed(Family::T3, "I1_o,2_4,1b", "psi4,1b failed");
            return outcome(Family::T3, "I1_o,2_4,1b", *img, {"psi4,1 range b"});
        }
        // explicit leftover images
        if (l2 == 5 && p.part(3) == 4 && p.part(4) == 3 && p.part(5) == 2) {
            if (l1 == 7)
                return outcome(Family::T3, "I1_o,2_4,1L",
                               Partition::from_parts({5, 4, 4, 4, 4}),
                               {"psi4,1 leftover"});
            if (l1 == 9)
                return outcome(Family::T3, "I1_o,2_4,1L",
                               Partition::from_parts({5, 4, 4, 4, 4, 2}),
                               {"psi4,1 leftover"});
            if (l1 == 11)
                return outcome(Family::T3, "I1_o,2_4,1L",
                               Partition::from_parts({5, 4, 4, 4, 4, 4}),
                               {"psi4,1 leftover"});
        }
        if (bare) {
            b.add(l1 - 3).add(l2 - 3).add_rep(2, 5);
        } else if (p.part(4) == 4) {
            b.add(l1 - 1).add(l2 - 1).add(3).add_rep(2, 5);
        } else {
            b.add(l1 - 3).add(l2 - 3).add(3).add_rep(2, 6);
        }
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,2_4,1c", "psi4,1c failed");
        return outcome(Family::T3, "I1_o,2_4,1c", *img, {"psi4,1 range c"});
    }
    if (l2 % 2 == 1) {
        // (l1,l2,4^{s+1},3^{r+s},2^r) with r+s >= 2
        const int s = p.mult(4) - 1;
        const bool odd_rs = (r + s) % 2 == 1;
        const long m2 = odd_rs ? 2L * s + 2 + 3L * (r + s - 1) / 2 + r
                               : 2L * s + 2 + 3L * (r + s) / 2 + r;
        ImageBuilder b;
        b.add(l1).add(l2);
        if (odd_rs) b.add(3);
        b.add_rep(2, m2);
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,2_4,2", "psi4,2 failed");
        return outcome(Family::T3, "I1_o,2_4,2", *img, {"psi4,2"});
    }
    // l2 even: the count of 4s excludes l2 itself
    int fours = 0;
    for (int i = 3; i <= p.len(); ++i)
        if (p.part(i) == 4) ++fours;
    const int s = fours - 1;
    const bool odd_rs = (r + s) % 2 == 1;
    const long m2 = odd_rs ? 2L * s + 2 + 3L * (r + s + 1) / 2 + r
                           : 2L * s + 2 + 3L * (r + s + 2) / 2 + r;
    ImageBuilder b;
    b.add(l1).add(l2);
    if (odd_rs) b.add(3);
    b.add_rep(2, m2);
    auto img = b.build();
    if (!img) return unconstructed(Family::T3, "I1_o,2_4,3", "psi4,3 failed");
    return outcome(Family::T3, "I1_o,2_4,3", *img, {"psi4,3"});
}

MappingOutcome psi5(const Partition& p) {
    const int l1 = p.part(1), l2 = p.part(2);
    const std::vector<int> o = odd_parts(p);
    const std::vector<int> e = even_parts(p);
    if (l2 % 2 == 1 && p.len() > 5) {
        // odds (l1,l2,5,x,...), evens all in {2,4} with a repeated value
        std::vector<int> xs = slice1(o, 4, static_cast<int>(o.size()));
        const int v = (p.mult(4) >= 2) ? 4 : 2;
        if (p.mult(v) < 2)
            return unconstructed(Family::T3, "I1_o,2_5,1", "psi5,1: no repeated even");
        std::vector<int> rest = minus_one(minus_one(e, v), v);
        const int delta = (l2 % 4 == 3) ? (l2 + 1) / 2 : (l2 + 3) / 2;
        const int extra = (l2 % 4 == 3) ? 4 : 2;
        ImageBuilder b;
        b.add(l1).add(xs).add(rest).add(v + delta).add(v + delta).add(extra);
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,2_5,1", "psi5,1 failed");
        return outcome(Family::T3, "I1_o,2_5,1", *img, {"psi5,1"});
    }
    if (l2 % 2 == 1) {
        // len 5, tails (4,4), (4,2), (2,2); appended odd = tail sum + 1
        const int a = p.part(4) + p.part(5) + 1;
        ImageBuilder b;
        if (l1 >= l2 + 4) {
            b.add(l1 - 5).add(l2 - 1).add_rep(2, 5).add(a);
        } else {
            b.add(l1 - 5).add(l2 - 5).add_rep(2, 7).add(a);
        }
        auto img = b.build(/*drop_zeros=*/true);
        if (!img) return unconstructed(Family::T3, "I1_o,2_5,2", "psi5,2 failed");
        return outcome(Family::T3, "I1_o,2_5,2", *img, {"psi5,2"});
    }
    // l2 even: lambda = (l1,5,x,...) u (l2,y,...)
    std::vector<int> xs = slice1(o, 3, static_cast<int>(o.size()));
    std::vector<int> ys = slice1(e, 2, static_cast<int>(e.size()));
    ImageBuilder b;
    std::string rule;
    std::string label;
    if (l1 == 13 && l2 == 8) {
        b.add(xs).add(12).add(12).add(ys).add(2);
        rule = "psi5,3 rerouted (13,...,8,...) class";
        label = "I1_o,2_5,3d";
    } else if (l1 > 2 * l2 + 3) {
        const bool mod3 = l1 % 4 == 3;
        const int h = (l1 - (mod3 ? 7 : 5)) / 2;
        b.add(mod3 ? 7 : 5).add(5).add(xs).add(h).add(h).add(l2).add(ys);
        rule = "psi5,3 range a";
        label = "I1_o,2_5,3a";
    } else if (l1 > l2 + 5) {
        b.add(l1 - l2 - 2).add(5).add(ys).add(l2).add(l2).add(xs).add(2);
        rule = "psi5,3 range b";
        label = "I1_o,2_5,3b";
    } else if (l1 == l2 + 5) {
        b.add(l2 - 1).add(5).add(xs).add(l2 - 2).add(6).add(ys).add(2);
        rule = "psi5,3 range c (gap 5)";
        label = "I1_o,2_5,3c";
    } else if (l1 == l2 + 3) {
        b.add(l2 - 1).add(5).add(xs).add(l2 - 2).add(4).add(ys).add(2);
        rule = "psi5,3 range c (gap 3)";
        label = "I1_o,2_5,3c";
    } else {
        // l1 == l2 + 1
        b.add(xs).add(l2).add(l2).add(6).add(ys);
        rule = "psi5,3 left-over (gap 1)";
        label = "I1_o,2_5,3d";
    }
    auto img = b.build();
    if (!img) return unconstructed(Family::T3, label, rule + " failed");
    return outcome(Family::T3, label, *img, {rule});
}

}  // namespace

namespace detail {

MappingOutcome thm3_natural(const Partition& p) {
    if (!satisfies(p, family_domain(Family::T3)))
        throw std::invalid_argument(
            "thm3_map: input must be odd-heavy with smallest part >= 2");
    const int g_o = bias_diff(p);
    const bool a_odd = p.largest() % 2 == 1;
    if (!(g_o == 1 && a_odd)) {
        MappingOutcome r = (p.len() % 2 == 0) ? f1_core(p, Family::T3, false)
                                              : f2_core(p, Family::T3, false);
        r.tag.label = "I_o";
        return r;
    }
    if (p.len() == 1) {
        const long n = p.n();
        if (n == 3 || n == 5) return residual(Family::T3, "(n)-degenerate");
        ImageBuilder b;
        if (n % 4 == 3) {
            b.add_rep(4, (n - 3) / 4).add(3);
        } else {
            b.add_rep(4, (n - 5) / 4).add(3).add(2);
        }
        auto img = b.build();
        if (!img || bias_class(*img) != Bias::EvenHeavy)
            return unconstructed(Family::T3, "I1_o-(n)", "(n) rule image not even-heavy");
        return outcome(Family::T3, "I1_o-(n)", *img, {"(n) -> fours and a three"});
    }
    const int l1 = p.part(1), l2 = p.part(2), l3 = p.part(3);
    if (l3 >= 6) {
        ImageBuilder b;
        b.add(l1 + 1).add(l2 - 4).add(l3 - 4);
        b.add(slice1(p.parts(), 4, p.len()));
        b.add(4).add(3);
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,1", "psi1 failed");
        return outcome(Family::T3, "I1_o,1", *img, {"psi1"});
    }
    if (l3 == 2) {
        ImageBuilder b;
        b.add(l1 - l2 + 2).add_rep(2, l2);
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,2_2", "psi2 failed");
        return outcome(Family::T3, "I1_o,2_2", *img, {"psi2"});
    }
    if (l3 == 3) {
        if (l2 % 2 == 1) {
            // psi2 on (l1,l2,2); remaining parts ride along
            std::vector<int> rest =
                minus_one(slice1(p.parts(), 3, p.len()), 2);
            if (static_cast<int>(rest.size()) == p.len() - 2)
                return unconstructed(Family::T3, "I1_o,2_3,1", "psi3,1: no part 2");
            ImageBuilder b;
            b.add(l1 - l2 + 2).add_rep(2, l2).add(rest);
            auto img = b.build();
            if (!img) return unconstructed(Family::T3, "I1_o,2_3,1", "psi3,1 failed");
            return outcome(Family::T3, "I1_o,2_3,1", *img, {"psi3,1 = psi2 on (l1,l2,2)"});
        }
        const int r = p.mult(2);
        if (l1 != 5) {
            ImageBuilder b;
            b.add(l1 - 4).add_rep(3, p.mult(3)).add_rep(2, r + l2 / 2 + 2);
            auto img = b.build();
            if (!img) return unconstructed(Family::T3, "I1_o,2_3,2", "psi3,2 failed");
            return outcome(Family::T3, "I1_o,2_3,2", *img, {"psi3,2"});
        }
        ImageBuilder b;
        b.add_rep(3, r + 2).add_rep(2, r + 3);
        auto img = b.build();
        if (!img) return unconstructed(Family::T3, "I1_o,2_3,3", "psi3,3 failed");
        return outcome(Family::T3, "I1_o,2_3,3", *img, {"psi3,3"});
    }
    if (l3 == 4) return psi4(p);
    return psi5(p);  // l3 == 5
}

}  // namespace detail

MappingOutcome thm3_map(const Partition& p) {
    return detail::family_map_via_audit(p, Family::T3);
}

}  // namespace parbias
