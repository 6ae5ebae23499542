#include <numeric>
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

// rho_t: keep the evens, shrink the largest r-t odds by 2, melt the t
// smallest odds (plus the shrinkage) into 1s.
MappingOutcome rho(const Partition& p, int t, const std::string& label) {
    const std::vector<int> e = even_parts(p);
    const std::vector<int> o = odd_parts(p);
    const int r = static_cast<int>(o.size());
    if (r < t)
        return unconstructed(Family::T4, label, "rho: fewer odds than melted");
    long ones = 2L * (r - t);
    for (int i = r - t; i < r; ++i) ones += o[static_cast<std::size_t>(i)];
    ImageBuilder b;
    b.add(e);
    for (int i = 0; i < r - t; ++i) b.add(o[static_cast<std::size_t>(i)] - 2);
    b.add_rep(1, ones);
    auto img = b.build();
    if (!img) return unconstructed(Family::T4, label, "rho failed");
    return outcome(Family::T4, label, *img, {"rho_" + std::to_string(t)});
}

}  // namespace

namespace detail {

MappingOutcome thm4_natural(const Partition& p) {
    if (!satisfies(p, family_domain(Family::T4)))
        throw std::invalid_argument("thm4_map: input must be even-heavy with no part 2");
    const int ones = p.mult(1);
    if (ones > 0) {
        // strip the 1s; the remainder keeps an even-part excess >= 2
        std::vector<int> core = p.parts();
        core.resize(core.size() - static_cast<std::size_t>(ones));
        Partition hat = Partition::from_sorted(std::move(core));
        MappingOutcome r = (hat.len() % 2 == 0) ? f1_core(hat, Family::T4, true)
                                                : f2_core(hat, Family::T4, true);
        std::vector<int> parts = r.image.parts();
        parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
        r.image = Partition::from_parts(std::move(parts));
        r.tag.label = (hat.len() % 2 == 0) ? "P_e,3" : "P_e,4";
        r.trace.push_back("1s carried through");
        return r;
    }
    const std::vector<int> e = even_parts(p);
    const std::vector<int> o = odd_parts(p);
    const int diff_e = -bias_diff(p);
    const bool a_even = p.largest() % 2 == 0;
    if (!(diff_e == 1 && a_even)) {
        MappingOutcome r = (p.len() % 2 == 0) ? f1_core(p, Family::T4, true)
                                              : f2_core(p, Family::T4, true);
        r.tag.label = (p.len() % 2 == 0) ? "P_e,1" : "P_e,2";
        return r;
    }
    // excess exactly 1, largest even: evens e1..e_{r+1}, odds o1..o_r
    const int r = static_cast<int>(o.size());
    const int threes = p.mult(3);
    // the (e1,e2,3) and (e1,e2,e3,3,3) shapes take precedence over phi
    if (p.len() == 3 && threes == 1) {
        // (e1, e2, 3), n odd >= 11
        if (p.n() > 23) return residual(Family::T4, "P_e,5b-residual");
        ImageBuilder b;
        b.add(e[0] - e[1] + 4).add(e[1] - 1).add(e[1] - 1).add(1);
        auto img = b.build();
        if (!img) return unconstructed(Family::T4, "P_e,5b,rho5", "rho5 failed");
        return outcome(Family::T4, "P_e,5b,rho5", *img, {"rho_5"});
    }
    if (p.len() == 5 && threes == 2) {
        // (e1, e2, e3, 3, 3)
        ImageBuilder b;
        b.add(e[0] + 3).add(e[1] + 3).add(e[2]);
        auto img = b.build();
        if (!img) return unconstructed(Family::T4, "P_e,5b,rho4", "rho4 failed");
        return outcome(Family::T4, "P_e,5b,rho4", *img, {"rho_4"});
    }
    if ((r < 1 || e[0] != e[1]) && e.back() >= 6) {
        ImageBuilder b;
        b.add(e[0] - 4);
        b.add(detail::add_each(slice1(e, 2, static_cast<int>(e.size())), -2));
        b.add(o);
        b.add_rep(1, 2L * r + 4);
        auto img = b.build();
        if (!img) return unconstructed(Family::T4, "P_e,5a", "phi failed");
        return outcome(Family::T4, "P_e,5a", *img, {"phi"});
    }
    if (threes == 0) return rho(p, 1, "P_e,5b,rho1");
    if (threes == 1) return rho(p, 2, "P_e,5b,rho2");
    return rho(p, 3, "P_e,5b,rho3");
}

}  // namespace detail

MappingOutcome thm4_map(const Partition& p) {
    return detail::family_map_via_audit(p, Family::T4);
}

}  // namespace parbias
