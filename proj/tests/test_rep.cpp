#include "zgon/enumerate.hpp"
#include "zgon/hom.hpp"
#include "zgon/interval.hpp"
#include "zgon/structure.hpp"

#include <doctest.h>

using namespace zgon;

namespace {
Point pt(long long n) { return Point{1, n}; }
Interval iv(long long a, long long b, int h) { return Interval{pt(a), pt(b), h}; }
}  // namespace

TEST_CASE("interval family membership") {
    CHECK(in_interval_family(iv(0, 1, 0)));   // simple
    CHECK(in_interval_family(iv(0, 1, 1)));   // projective
    CHECK_FALSE(in_interval_family(iv(0, 2, 1)));
    CHECK_FALSE(in_interval_family(iv(0, 0, 0)));
    CHECK_FALSE(in_interval_family(iv(0, 1, 2)));
    CHECK(is_simple(iv(0, 1, 0)));
    CHECK(is_projective(iv(0, 1, 1)));
    CHECK(in_interval_family(Interval{Point{1, 5}, Point{2, -3}, 0}));  // crosses a boundary
}

TEST_CASE("derived intervals of a running example") {
    const DerivedIntervals d = derived(iv(0, 2, 0));
    CHECK(*d.left_grown == iv(-1, 2, 0));
    CHECK(*d.right_trimmed == iv(0, 1, 0));
    CHECK(d.down_translate == iv(-1, 1, 0));
    CHECK(*d.shift == iv(1, 0, 1));
    CHECK(*d.shift_inv == iv(2, 1, 1));
    CHECK(d.proj_frame == iv(1, 1, 1));
}

TEST_CASE("derived intervals degenerate exactly at the extremes") {
    const DerivedIntervals proj = derived(iv(0, 1, 1));
    CHECK_FALSE(proj.left_grown.has_value());
    CHECK_FALSE(proj.shift.has_value());
    CHECK_FALSE(proj.shift_inv.has_value());
    CHECK(proj.proj_frame == iv(0, 1, 0));

    const DerivedIntervals simple = derived(iv(0, 1, 0));
    CHECK_FALSE(simple.right_trimmed.has_value());
    CHECK(simple.left_grown.has_value());
}

TEST_CASE("derived intervals stay inside the family") {
    for (int m : {1, 2}) {
        for (const Interval& u : enumerate_intervals(GonConfig{m}, 3)) {
            const DerivedIntervals d = derived(u);
            CHECK(in_interval_family(d.down_translate));
            CHECK(in_interval_family(d.proj_frame));
            if (d.left_grown) CHECK(in_interval_family(*d.left_grown));
            if (d.right_trimmed) CHECK(in_interval_family(*d.right_trimmed));
            if (d.shift) CHECK(in_interval_family(*d.shift));
            if (d.shift_inv) CHECK(in_interval_family(*d.shift_inv));
        }
    }
}

TEST_CASE("left intersection inequalities") {
    CHECK(left_intersect_nonempty(iv(-1, 1, 0), iv(0, 2, 0), 0));
    CHECK(left_intersect_nonempty(iv(5, 2, 1), iv(0, 3, 0), -1));
    CHECK_FALSE(left_intersect_nonempty(iv(0, 2, 0), iv(0, 2, 0), -7));
}

TEST_CASE("hom dimensions") {
    CHECK(hom_dim_rep(iv(0, 1, 1), iv(0, 1, 1)) == 2);
    CHECK(hom_dim_rep(iv(0, 2, 0), iv(-1, 1, 0)) == 1);
    CHECK(hom_dim_rep(iv(0, 1, 0), iv(2, 3, 0)) == 0);
}

TEST_CASE("hammock classification") {
    CHECK(hammock_classify(iv(0, 3, 0), iv(5, 2, 1)) == Hammock::kHomMinus);
    CHECK(hammock_classify(iv(0, 3, 0), iv(2, 1, 1)) == Hammock::kProj);
    CHECK(hammock_classify(iv(0, 2, 0), iv(-1, 1, 0)) == Hammock::kHomPlus);
    CHECK(hammock_classify(iv(0, 1, 0), iv(2, 3, 0)) == Hammock::kNone);
    // the two-dimensional self-space of a projective classifies as P
    CHECK(hammock_classify(iv(0, 1, 1), iv(0, 1, 1)) == Hammock::kProj);
}

TEST_CASE("projective factoring dimension") {
    CHECK(proj_factor_dim(iv(0, 3, 0), iv(2, 1, 1)) == 1);
    CHECK(proj_factor_dim(iv(0, 3, 0), iv(5, 2, 1)) == 0);
    CHECK(proj_factor_dim(iv(0, 1, 1), iv(0, 1, 1)) == 2);
}

TEST_CASE("hom report stabilises the projective self pair to zero") {
    const HomReport r = make_hom_report(iv(0, 1, 1), iv(0, 1, 1));
    CHECK(r.dim_rep == 2);
    CHECK(r.dim_proj == 2);
    CHECK(r.dim_stable == 0);
    CHECK(r.hammock == Hammock::kProjSelf);
}

TEST_CASE("monomorphism and epimorphism criteria") {
    CHECK(exists_mono(iv(1, 2, 0), iv(0, 2, 0)));
    CHECK(exists_epi(iv(0, 2, 0), iv(0, 1, 0)));
    CHECK_FALSE(exists_mono(iv(0, 1, 0), iv(2, 3, 0)));
    CHECK_THROWS_AS(exists_mono(iv(0, 1, 1), iv(0, 2, 0)), std::domain_error);
    CHECK_THROWS_AS(exists_epi(iv(0, 2, 0), iv(0, 1, 1)), std::domain_error);
}

TEST_CASE("covers and envelopes") {
    CHECK(projective_cover(iv(0, 3, 0)) == iv(0, 1, 1));
    CHECK(injective_envelope(iv(0, 3, 0)) == iv(2, 3, 1));
    CHECK(projective_cover(iv(0, 1, 1)) == iv(0, 1, 1));
    CHECK(injective_envelope(iv(0, 1, 1)) == iv(0, 1, 1));
}

TEST_CASE("middle terms of canonical short exact sequences") {
    SUBCASE("generic position yields both terms") {
        const MiddleTerms mt = middle_terms(iv(0, 2, 0), iv(-2, 1, 0));
        CHECK(mt.union_term == iv(-2, 2, 0));
        CHECK(*mt.meet_term == iv(0, 1, 0));
    }
    SUBCASE("the desuspension of the translate gives a projective and no overlap") {
        const MiddleTerms mt = middle_terms(iv(0, 2, 0), iv(1, 0, 1));
        CHECK(mt.union_term == iv(1, 2, 1));
        CHECK(is_projective(mt.union_term));
        CHECK_FALSE(mt.meet_term.has_value());
    }
    SUBCASE("hypotheses are enforced") {
        CHECK_THROWS_AS(middle_terms(iv(0, 1, 1), iv(0, 1, 0)), std::domain_error);
        CHECK_THROWS_AS(middle_terms(iv(0, 2, 0), iv(4, 5, 0)), std::domain_error);
    }
}

TEST_CASE("composition factors") {
    SUBCASE("finite length counts the enclosed vertices") {
        const CompositionSeries s = composition_factors(iv(0, 3, 0), 5);
        CHECK(s.finite);
        CHECK(*s.total_length == 3);
        REQUIRE(s.factors.size() == 3);
        CHECK(s.factors[0] == iv(2, 3, 0));
        CHECK(s.factors[1] == iv(1, 2, 0));
        CHECK(s.factors[2] == iv(0, 1, 0));
    }
    SUBCASE("projectives never terminate") {
        const CompositionSeries s = composition_factors(iv(0, 1, 1), 3);
        CHECK_FALSE(s.finite);
        REQUIRE(s.factors.size() == 3);
        CHECK(s.factors[0] == iv(0, 1, 0));
        CHECK(s.factors[1] == iv(-1, 0, 0));
        CHECK(s.factors[2] == iv(-2, -1, 0));
    }
    SUBCASE("endpoints in distinct copies never terminate") {
        const Interval u{Point{1, 0}, Point{2, 0}, 0};
        const CompositionSeries s = composition_factors(u, 2);
        CHECK_FALSE(s.finite);
        REQUIRE(s.factors.size() == 2);
        CHECK(s.factors[0] == simple_module(Point{2, -1}));
        CHECK(s.factors[1] == simple_module(Point{2, -2}));
    }
}

TEST_CASE("almost split sequences") {
    SUBCASE("two middle terms in general") {
        const AlmostSplitSequence seq = almost_split_sequence(iv(0, 2, 0));
        CHECK(seq.middle == std::vector<Interval>{iv(-1, 2, 0), iv(0, 1, 0)});
        CHECK(seq.right == iv(-1, 1, 0));
    }
    SUBCASE("one middle term at a simple") {
        const AlmostSplitSequence seq = almost_split_sequence(iv(0, 1, 0));
        CHECK(seq.middle == std::vector<Interval>{iv(-1, 1, 0)});
        CHECK(seq.right == iv(-1, 0, 0));
    }
    SUBCASE("translate round trip") {
        const AlmostSplitSequence seq = almost_split_sequence(iv(0, 2, 0));
        // the translate sends the right end back to the left end
        CHECK(derived(seq.left).down_translate == seq.right);
    }
    CHECK_THROWS_AS(almost_split_sequence(iv(0, 1, 1)), std::domain_error);
}

TEST_CASE("irreducible morphisms in the abelian category") {
    CHECK(irreducible_rep(iv(0, 2, 0), iv(0, 1, 0)));
    CHECK_FALSE(irreducible_rep(iv(0, 2, 0), iv(-1, 1, 0)));
    // a simple has no trim, so only the growth direction remains
    CHECK(irreducible_rep(iv(0, 1, 0), iv(-1, 1, 0)));
    CHECK_FALSE(irreducible_rep(iv(0, 1, 0), iv(-1, 0, 0)));
}

TEST_CASE("composite vanishing by winding pattern") {
    CHECK(compose_nonzero(iv(0, 3, 0), iv(-1, 2, 0), iv(-2, 1, 0)));
    CHECK_FALSE(compose_nonzero(iv(0, 3, 0), iv(2, 1, 1), iv(1, 0, 1)));
    // a double drop in winding is always zero
    CHECK_FALSE(compose_nonzero(iv(0, 3, 0), iv(2, 1, 1), iv(4, 3, 1)));
    CHECK_THROWS_AS(compose_nonzero(iv(0, 3, 0), iv(0, 3, 0), iv(-1, 2, 0)), std::domain_error);
    CHECK_THROWS_AS(compose_nonzero(iv(0, 1, 0), iv(2, 3, 0), iv(4, 5, 0)), std::domain_error);
}
