#include <stdexcept>

#include "maps_util.hpp"
#include "parbias/maps.hpp"

namespace parbias {

using detail::ImageBuilder;
using detail::add_each;
using detail::slice1;

std::string to_string(Family f) {
    switch (f) {
        case Family::T1: return "T1";
        case Family::T2: return "T2";
        case Family::T3: return "T3";
        case Family::T4: return "T4";
    }
    return "?";
}

ClassSpec family_domain(Family f) {
    switch (f) {
        case Family::T1: return ClassSpec::P().with_bias(Bias::EvenHeavy);
        case Family::T2: return ClassSpec::Pd().with_bias(Bias::EvenHeavy);
        case Family::T3: return ClassSpec::Q().with_bias(Bias::OddHeavy);
        case Family::T4: return ClassSpec::avoiding({2}).with_bias(Bias::EvenHeavy);
    }
    throw std::logic_error("bad family");
}

ClassSpec family_codomain(Family f) {
    switch (f) {
        case Family::T1: return ClassSpec::P().with_bias(Bias::OddHeavy);
        case Family::T2: return ClassSpec::Pd().with_bias(Bias::OddHeavy);
        case Family::T3: return ClassSpec::Q().with_bias(Bias::EvenHeavy);
        case Family::T4: return ClassSpec::avoiding({2}).with_bias(Bias::OddHeavy);
    }
    throw std::logic_error("bad family");
}

namespace detail {

// Majority parts: the parity in excess (even parts when even_majority).
// Both cores flip the majority parity to produce the opposite bias.
MappingOutcome f1_core(const Partition& p, Family fam, bool even_majority) {
    std::vector<int> maj = even_majority ? even_parts(p) : odd_parts(p);
    std::vector<int> mino = even_majority ? odd_parts(p) : even_parts(p);
    const int k = static_cast<int>(maj.size());
    const int m = static_cast<int>(mino.size());
    const int len = k + m;
    if (len % 2 != 0 || k - m < 2)
        throw std::invalid_argument("f1: needs even length and majority excess >= 2");
    const int r = len / 2;
    ImageBuilder b;
    b.add(add_each(mino, +1));
    b.add(add_each(slice1(maj, 1, k - r), +1));
    b.add(add_each(slice1(maj, k - r + 1, k), -1));
    auto img = b.build();
    if (!img) throw std::logic_error("f1: non-positive image part");
    return outcome(fam, even_majority ? "G_e,0" : "I_o(len even)", *img,
                   {"f1"});
}

MappingOutcome f2_core(const Partition& p, Family fam, bool even_majority) {
    std::vector<int> maj = even_majority ? even_parts(p) : odd_parts(p);
    std::vector<int> mino = even_majority ? odd_parts(p) : even_parts(p);
    const int k = static_cast<int>(maj.size());
    const int m = static_cast<int>(mino.size());
    const int len = k + m;
    if (len % 2 != 1 || k - m < 1)
        throw std::invalid_argument("f2: needs odd length and majority excess >= 1");
    const bool a_majority = (p.largest() % 2 == 0) == even_majority;
    if (k - m == 1 && a_majority)
        throw std::invalid_argument("f2: excess 1 with majority-parity largest part is outside the domain");
    const int r = (len - 1) / 2;
    ImageBuilder b;
    std::string branch;
    if (a_majority) {
        branch = "f2 (largest part of majority parity)";
        b.add(add_each(mino, +1));
        b.add(maj[0] + 2);
        b.add(add_each(slice1(maj, 2, k - r - 1), +1));
        b.add(add_each(slice1(maj, k - r, k), -1));
    } else {
        branch = "f2 (largest part of minority parity)";
        b.add(add_each(slice1(mino, 2, m), +1));
        b.add(mino[0] + 2);
        b.add(add_each(slice1(maj, 1, k - r - 1), +1));
        b.add(add_each(slice1(maj, k - r, k), -1));
    }
    auto img = b.build();
    if (!img) throw std::logic_error("f2: non-positive image part");
    return outcome(fam, even_majority ? "G_e,1" : "I_o(len odd)", *img,
                   {branch});
}

}  // namespace detail

DomainTag thm1_classify(const Partition& p) {
    if (bias_class(p) != Bias::EvenHeavy)
        throw std::invalid_argument("thm1_classify: input must be even-heavy");
    const int diff_e = -bias_diff(p);
    const bool a_even = p.largest() % 2 == 0;
    if (diff_e == 1 && a_even) {
        const int l2 = p.part(2), l3 = p.part(3);
        if (l2 >= 3 && l3 >= 3) return {Family::T1, "Gbar0_e", false};
        if (p.n() % 2 == 0) {
            if (l2 <= 1) return {Family::T1, "A1", true};
            if (l2 % 2 == 0) return {Family::T1, "A2", true};
            return {Family::T1, "A3", true};
        }
        if (l2 <= 2 && l3 <= 1) return {Family::T1, "B1", true};
        // two even parts only: shapes (l1,l2,1) with l2 even >= 4 and
        // (l1,l2,2) with l2 odd >= 3.  They satisfy the residual condition
        // but fall outside the k >= 1 shape families counted by the
        // closed form, so they get their own labels.
        if (even_parts(p).size() == 2) {
            if (l2 % 2 == 0) return {Family::T1, "B2,0", true};
            return {Family::T1, "B3,0", true};
        }
        if (l2 % 2 == 0) return {Family::T1, "B2", true};
        return {Family::T1, "B3", true};
    }
    if (p.len() % 2 == 0) return {Family::T1, "G_e,0", false};
    return {Family::T1, "G_e,1", false};
}

MappingOutcome thm1_f1(const Partition& p) {
    DomainTag t = thm1_classify(p);
    if (t.label != "G_e,0")
        throw std::invalid_argument("thm1_f1: input not in G_e,0");
    return detail::f1_core(p, Family::T1, true);
}

MappingOutcome thm1_f2(const Partition& p) {
    DomainTag t = thm1_classify(p);
    if (t.label != "G_e,1")
        throw std::invalid_argument("thm1_f2: input not in G_e,1");
    return detail::f2_core(p, Family::T1, true);
}

MappingOutcome thm1_f3(const Partition& p) {
    DomainTag t = thm1_classify(p);
    if (t.label != "Gbar0_e")
        throw std::invalid_argument("thm1_f3: input not in Gbar0_e");
    ImageBuilder b;
    b.add(p.part(1) + 1);
    b.add(detail::slice1(p.parts(), 4, p.len()));
    b.add(p.part(2) - 2).add(p.part(3) - 2).add(2).add(1);
    auto img = b.build();
    if (!img) throw std::logic_error("f3: non-positive image part");
    MappingOutcome o = detail::outcome(Family::T1, "Gbar0_e", *img, {"f3"});
    return o;
}

MappingOutcome thm1_map(const Partition& p) {
    DomainTag t = thm1_classify(p);
    if (t.residual) {
        MappingOutcome o = detail::residual(Family::T1, t.label);
        return o;
    }
    if (t.label == "G_e,0") return thm1_f1(p);
    if (t.label == "G_e,1") return thm1_f2(p);
    return thm1_f3(p);
}

DomainTag thm5_classify(const Partition& p) {
    if (bias_class(p) != Bias::EvenHeavy || p.mult(1) > 0 || p.mult(2) > 0)
        throw std::invalid_argument(
            "thm5_classify: input must be even-heavy with no part 1 or 2");
    const int diff_e = -bias_diff(p);
    const bool a_even = p.largest() % 2 == 0;
    if (!(diff_e == 1 && a_even))
        return {Family::T4, "G_e-dispatchable", false};
    // the (n) singleton has no third part; it falls in with the small-part class
    if (p.part(3) > 6) return {Family::T4, "G0_e,1", false};
    return {Family::T4, "G0_e,2", false};
}

}  // namespace parbias
