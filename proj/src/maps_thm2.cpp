#include <stdexcept>

#include "maps_util.hpp"
#include "parbias/maps.hpp"

namespace parbias {

using detail::ImageBuilder;

namespace detail {

MappingOutcome thm2_natural(const Partition& p) {
    if (!satisfies(p, family_domain(Family::T2)))
        throw std::invalid_argument("thm2_map: input must be distinct and even-heavy");
    const std::vector<int> e = even_parts(p);
    const std::vector<int> o = odd_parts(p);
    const int diff = static_cast<int>(e.size() - o.size());
    const bool a_even = p.largest() % 2 == 0;
    const long n = p.n();

    if (!(diff == 1 && a_even)) {
        MappingOutcome r = (p.len() % 2 == 0) ? f1_core(p, Family::T2, true)
                                              : f2_core(p, Family::T2, true);
        r.tag.label = (p.len() % 2 == 0) ? "H_e,0" : "H_e,1";
        return r;
    }

    if (o.size() >= 2) {
        // star transform: fold the two largest odds into the two largest evens
        ImageBuilder b;
        b.add(e[0] + o[0]).add(e[1] + o[1]);
        b.add(slice1(e, 3, static_cast<int>(e.size())));
        b.add(slice1(o, 3, static_cast<int>(o.size())));
        auto img = b.build();
        if (!img) return unconstructed(Family::T2, "Hbar0_e", "star transform failed");
        return outcome(Family::T2, "Hbar0_e", *img, {"star transform"});
    }

    if (o.empty()) {
        // the lone partition (n), n even: two consecutive odds (plus a 2)
        const bool div4 = n % 4 == 0;
        const int o1 = div4 ? static_cast<int>((n + 2) / 2)
                            : static_cast<int>(n / 2);
        ImageBuilder b;
        b.add(o1).add(o1 - 2);
        if (!div4) b.add(2);
        auto img = b.build();
        if (!img || !img->distinct())
            return residual(Family::T2, "(n)-degenerate");
        return outcome(Family::T2, "H0_e-(n)", *img,
                       {div4 ? "(n) -> two consecutive odds"
                             : "(n) -> two consecutive odds and a 2"});
    }

    // lone odd part: lambda = (e1, e2, o1) with n odd
    const int e1 = e[0], e2 = e[1], o1 = o[0];
    if (e2 == 2) {
        ImageBuilder b;
        std::string rule;
        if (e1 % 4 == 0) {
            b.add(e1 / 2 + 1).add(e1 / 2 - 1).add(1).add(o1 + 1);
            rule = "S, S* identity, S**";
        } else {
            b.add(e1 / 2).add(e1 / 2 - 2).add(3).add(o1 + 1);
            rule = "S, S* shift, S**";
        }
        auto img = b.build();
        if (!img) return unconstructed(Family::T2, "H0_e,1", "split chain failed");
        return outcome(Family::T2, "H0_e,1", *img, {rule});
    }
    if (e2 >= 6) {
        ImageBuilder b;
        std::string rule;
        if (o1 == 3) {
            b.add(e1 - 3).add(5).add(1).add(e2 - 2).add(2);
            rule = "U then U* branch 2";
        } else if (e1 - 3 == o1) {
            b.add(e1 - 3).add(o1 - 2).add(5).add(e2 - 2).add(2);
            rule = "U then U* branch 3";
        } else if (e1 - 1 == o1 && e2 != 6) {
            b.add(e1 - 3).add(o1 - 4).add(5).add(e2 - 2).add(4);
            rule = "U then U* branch 4";
        } else if (e1 - 1 == o1) {
            b.add(e1 - 3).add(o1 - 4).add(3).add(6).add(4);
            rule = "U then U* branch 5";
        } else {
            b.add(e1 - 3).add(3).add(o1).add(e2 - 2).add(2);
            rule = "U then U* branch 1";
        }
        auto img = b.build();
        if (!img) return unconstructed(Family::T2, "H0_e,2", "U chain failed");
        return outcome(Family::T2, "H0_e,2", *img, {rule});
    }
    // e2 == 4: handled by cardinality comparison
    return residual(Family::T2, "H0_e,3");
}

}  // namespace detail

MappingOutcome thm2_map(const Partition& p) {
    return detail::family_map_via_audit(p, Family::T2);
}

}  // namespace parbias
