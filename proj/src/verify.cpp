#include "zgon/verify.hpp"

#include "zgon/arc.hpp"
#include "zgon/enumerate.hpp"
#include "zgon/hom.hpp"
#include "zgon/io.hpp"
#include "zgon/oracle/oracle.hpp"
#include "zgon/quiver.hpp"
#include "zgon/structure.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace zgon {

namespace {

constexpr size_t kMaxCounterexamples = 5;

struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++result.checked;
        if (ok) return;
        result.pass = false;
        if (result.counterexamples.size() < kMaxCounterexamples)
            result.counterexamples.push_back(what);
    }

    SuiteResult done() { return std::move(result); }
};

std::string pair_tag(const Interval& u, const Interval& v) {
    return format_interval(u) + " -> " + format_interval(v);
}

std::string pair_tag(const Arc& a, const Arc& b) {
    return format_arc(a) + " -> " + format_arc(b);
}

oracle::SampleChain make_chain(const VerifyConfig& cfg) {
    return oracle::SampleChain::build(cfg.gon, Embedding(cfg.squash), cfg.window);
}

std::vector<std::pair<Interval, Interval>> sample_pairs(const VerifyConfig& cfg,
                                                        const std::vector<Interval>& all,
                                                        long long count, std::uint64_t salt) {
    std::mt19937_64 rng(cfg.seed ^ salt);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::vector<std::pair<Interval, Interval>> out;
    out.reserve(static_cast<size_t>(count));
    for (long long i = 0; i < count; ++i) out.emplace_back(all[pick(rng)], all[pick(rng)]);
    return out;
}

}  // namespace

SuiteResult suite_hom_dimensions(const VerifyConfig& cfg) {
    Recorder rec("hom_dimensions");
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const Interval& u : intervals)
        for (const Interval& v : intervals) {
            const HomReport r = make_hom_report(u, v);
            const bool self_proj = (u == v && is_projective(u));
            bool ok = r.dim_rep >= 0 && r.dim_rep <= 2 && (r.dim_rep == 2) == self_proj &&
                      r.dim_stable == r.dim_rep - r.dim_proj && r.dim_stable >= 0 &&
                      r.dim_stable <= 1 && (r.hammock == Hammock::kNone) == (r.dim_rep == 0);
            if (self_proj) ok = ok && r.hammock == Hammock::kProjSelf && r.dim_stable == 0;
            rec.check(ok, pair_tag(u, v));
        }
    return rec.done();
}

SuiteResult suite_hammock_partition(const VerifyConfig& cfg) {
    Recorder rec("hammock_partition");
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const Interval& u : intervals) {
        const DerivedIntervals d = derived(u);
        for (const Interval& v : intervals) {
            const int in_p = in_proj_hammock(d.proj_frame, v) ? 1 : 0;
            const int in_m = (d.shift_inv && in_hom_minus(*d.shift_inv, v)) ? 1 : 0;
            const int in_h = in_hom_plus(u, v) ? 1 : 0;
            const int members = in_p + in_m + in_h;
            const bool ok = members <= 1 && (hom_dim_rep(u, v) >= 1) == (members == 1);
            rec.check(ok, pair_tag(u, v));
        }
    }
    return rec.done();
}

SuiteResult suite_left_intersect_agreement(const VerifyConfig& cfg) {
    Recorder rec("left_intersect_agreement");
    const Embedding emb(cfg.squash);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const Interval& u : intervals)
        for (const Interval& v : intervals)
            for (int n = -3; n <= 3; ++n) {
                const bool closed = left_intersect_nonempty(v, u, n);
                const bool raw = oracle::left_intersect_oracle(cfg.gon, emb, v, u, n);
                rec.check(closed == raw,
                          pair_tag(u, v) + " at winding " + std::to_string(n));
            }
    return rec.done();
}

SuiteResult suite_hom_oracle_agreement(const VerifyConfig& cfg) {
    Recorder rec("hom_oracle_agreement");
    const auto chain = make_chain(cfg);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const auto& [u, v] : sample_pairs(cfg, intervals, cfg.oracle_pair_samples, 0x40a1)) {
        int got = -1;
        try {
            got = oracle::hom_dim_circle_oracle(chain, u, v, cfg.field);
        } catch (const std::logic_error&) {
            rec.check(false, pair_tag(u, v) + " (winding support violated)");
            continue;
        }
        const int expected = hom_dim_rep(u, v);
        rec.check(got == expected, pair_tag(u, v) + " closed_form=" + std::to_string(expected) +
                                       " oracle=" + std::to_string(got));
    }
    return rec.done();
}

SuiteResult suite_proj_factor_agreement(const VerifyConfig& cfg) {
    Recorder rec("proj_factor_agreement");
    const auto chain = make_chain(cfg);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const auto& [u, v] : sample_pairs(cfg, intervals, cfg.proj_pair_samples, 0x9801)) {
        const int got = oracle::proj_factor_dim_oracle(chain, u, v, cfg.window + 1, cfg.field);
        const int expected = proj_factor_dim(u, v);
        rec.check(got == expected, pair_tag(u, v) + " closed_form=" + std::to_string(expected) +
                                       " oracle=" + std::to_string(got));
    }
    return rec.done();
}

SuiteResult suite_exactness(const VerifyConfig& cfg) {
    Recorder rec("exactness");
    const auto chain = make_chain(cfg);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);

    for (const Interval& u : intervals) {
        if (is_projective(u)) continue;
        const AlmostSplitSequence seq = almost_split_sequence(u);
        rec.check(oracle::exactness_check(chain, seq.left, seq.middle, seq.right, cfg.field),
                  "almost split sequence at " + format_interval(u));
    }

    std::vector<std::pair<Interval, Interval>> setups;
    for (const Interval& u : intervals) {
        if (is_projective(u)) continue;
        const Interval down = derived(u).down_translate;
        for (const Interval& v : intervals)
            if (hom_dim_rep(down, v) == 1 && proj_factor_dim(down, v) == 0)
                setups.emplace_back(u, v);
    }
    if (cfg.exactness_pair_cap > 0 &&
        static_cast<long long>(setups.size()) > cfg.exactness_pair_cap) {
        std::mt19937_64 rng(cfg.seed ^ 0xe4ac7);
        std::shuffle(setups.begin(), setups.end(), rng);
        setups.resize(static_cast<size_t>(cfg.exactness_pair_cap));
    }
    for (const auto& [u, v] : setups) {
        const MiddleTerms mt = middle_terms(u, v);
        std::vector<Interval> mids{mt.union_term};
        if (mt.meet_term) mids.push_back(*mt.meet_term);
        rec.check(oracle::exactness_check(chain, u, mids, v, cfg.field),
                  "middle terms for " + pair_tag(u, v));
    }
    return rec.done();
}

SuiteResult suite_mono_epi(const VerifyConfig& cfg) {
    Recorder rec("mono_epi");
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    for (const Interval& u : intervals) {
        const DerivedIntervals d = derived(u);
        if (d.right_trimmed) {
            rec.check(exists_epi(u, *d.right_trimmed), "epi onto trim of " + format_interval(u));
            rec.check(irreducible_rep(u, *d.right_trimmed),
                      "irreducible onto trim of " + format_interval(u));
        }
        if (d.left_grown) {
            rec.check(exists_mono(u, *d.left_grown), "mono into growth of " + format_interval(u));
            rec.check(irreducible_rep(u, *d.left_grown),
                      "irreducible into growth of " + format_interval(u));
        }
        if (!is_projective(u)) {
            rec.check(exists_epi(projective_cover(u), u), "cover of " + format_interval(u));
            rec.check(exists_mono(u, injective_envelope(u)),
                      "envelope of " + format_interval(u));
        } else {
            rec.check(projective_cover(u) == u && injective_envelope(u) == u,
                      "projective self cover " + format_interval(u));
        }
    }
    return rec.done();
}

SuiteResult suite_uniseriality(const VerifyConfig& cfg) {
    Recorder rec("uniseriality");
    std::vector<Interval> finite;
    for (const Interval& u : enumerate_intervals(cfg.gon, cfg.window))
        if (u.winding == 0 && u.start.copy == u.end.copy) finite.push_back(u);
    std::mt19937_64 rng(cfg.seed ^ 0x5e41e5);
    std::uniform_int_distribution<size_t> pick(0, finite.size() - 1);
    for (long long i = 0; i < cfg.uniserial_samples; ++i) {
        const Interval u = finite[pick(rng)];
        const CompositionSeries s = composition_factors(u, 4 * cfg.window + 8);
        bool ok = s.finite && s.total_length &&
                  *s.total_length == u.end.index - u.start.index &&
                  static_cast<long long>(s.factors.size()) == *s.total_length;
        if (ok && !s.factors.empty()) {
            ok = s.factors.front() == simple_module(pred(u.end)) &&
                 s.factors.back() == simple_module(u.start);
            for (size_t k = 0; ok && k + 1 < s.factors.size(); ++k)
                ok = s.factors[k + 1] == simple_module(pred(s.factors[k].start));
        }
        rec.check(ok, "composition series of " + format_interval(u));
    }
    for (const Point& z : enumerate_points(cfg.gon, std::min<long long>(cfg.window, 2))) {
        const CompositionSeries s = composition_factors(projective_module(z), 10);
        bool ok = !s.finite && s.factors.size() == 10;
        Point expected = z;
        for (const Interval& f : s.factors) {
            ok = ok && f == simple_module(expected);
            expected = pred(expected);
        }
        rec.check(ok, "projective series at " + format_point(z));
    }
    return rec.done();
}

SuiteResult suite_composite_vanishing(const VerifyConfig& cfg) {
    Recorder rec("composite_vanishing");
    const auto chain = make_chain(cfg);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    std::mt19937_64 rng(cfg.seed ^ 0xc09905e);
    std::uniform_int_distribution<size_t> pick(0, intervals.size() - 1);
    long long produced = 0;
    long long attempts = 0;
    while (produced < cfg.triple_samples && attempts < 400 * cfg.triple_samples) {
        ++attempts;
        const Interval u = intervals[pick(rng)];
        const Interval v = intervals[pick(rng)];
        const Interval w = intervals[pick(rng)];
        if (u == v || v == w || u == w) continue;
        if (hom_dim_rep(u, v) != 1 || hom_dim_rep(v, w) != 1) continue;
        ++produced;
        const bool raw = oracle::composite_nonzero_oracle(chain, u, v, w);
        try {
            rec.check(compose_nonzero(u, v, w) == raw,
                      pair_tag(u, v) + " -> " + format_interval(w));
        } catch (const std::domain_error& err) {
            rec.check(false, pair_tag(u, v) + " -> " + format_interval(w) + " (" + err.what() + ")");
        }
    }
    return rec.done();
}

SuiteResult suite_serre_duality(const VerifyConfig& cfg) {
    Recorder rec("serre_duality");
    const auto arcs = enumerate_arcs(cfg.gon, cfg.window);
    for (const Arc& a : arcs)
        for (const Arc& b : arcs) {
            rec.check(serre_dual_check(a, b), pair_tag(a, b));
            if (hom_dim_stable(a, b) == 1) {
                const Arc dual = shift_arc(a, -1);
                const bool ok = hom_dim_stable(b, dual) == 1 &&
                                compose_nonzero_stable(a, b, dual);
                rec.check(ok, "pairing witness " + pair_tag(a, b));
            }
        }
    return rec.done();
}

SuiteResult suite_functor_identities(const VerifyConfig& cfg) {
    Recorder rec("functor_identities");
    const auto arcs = enumerate_arcs(cfg.gon, cfg.window);
    for (const Arc& a : arcs) {
        rec.check(tau_arc(a) == shift_arc(a, -2), "translate vs double shift at " + format_arc(a));
        rec.check(interval_to_arc(arc_to_interval(a)) == a, "round trip at " + format_arc(a));
    }

    const auto points = enumerate_points(cfg.gon, cfg.window);
    for (const Point& hi : points)
        for (const Point& lo : points) {
            const Arc a{hi, lo};
            rec.check(is_admissible(a) == admissible_closed_form(a),
                      "admissibility closed form at " + format_arc(a));
        }

    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    std::vector<Interval> stable;
    for (const Interval& u : intervals)
        if (!is_projective(u)) stable.push_back(u);

    for (const Interval& u : stable) {
        const Arc a = interval_to_arc(u);
        rec.check(arc_to_interval(a) == u, "interval round trip at " + format_interval(u));
        const DerivedIntervals d = derived(u);
        rec.check(interval_to_arc(*d.shift) == shift_arc(a, 1),
                  "shift compatibility at " + format_interval(u));
        rec.check(interval_to_arc(*d.shift_inv) == shift_arc(a, -1),
                  "inverse shift compatibility at " + format_interval(u));
        rec.check(tau_arc(interval_to_arc(d.down_translate)) == a,
                  "translate of the sequence end at " + format_interval(u));

        // Stabilised almost split sequence = almost split triangle.
        const AlmostSplitSequence seq = almost_split_sequence(u);
        const AlmostSplitTriangle tri = almost_split_triangle(interval_to_arc(seq.right));
        rec.check(tri.left == a, "triangle left term at " + format_interval(u));
        std::multiset<Arc> mids_seq, mids_tri(tri.middle.begin(), tri.middle.end());
        for (const Interval& mid : seq.middle)
            if (!is_projective(mid)) mids_seq.insert(interval_to_arc(mid));
        rec.check(mids_seq == mids_tri, "triangle middle terms at " + format_interval(u));
    }

    for (const Interval& u : stable)
        for (const Interval& v : stable) {
            const int stable_dim = hom_dim_stable(interval_to_arc(u), interval_to_arc(v));
            rec.check(stable_dim == hom_dim_rep(u, v) - proj_factor_dim(u, v),
                      "stabilisation identity at " + pair_tag(u, v));
        }

    for (const Arc& a : arcs)
        for (const Arc& b : arcs)
            rec.check(arc_hom_closed_form(a, b) == hom_dim_stable(a, b),
                      "arc Hom closed form at " + pair_tag(a, b));
    return rec.done();
}

SuiteResult suite_spherical_thick(const VerifyConfig& cfg) {
    Recorder rec("spherical_thick");
    if (cfg.gon.m != 1) return rec.done();  // only meaningful on one copy

    const Arc sphere{Point{1, 1}, Point{1, 0}};
    const std::vector<int> profile = spherical_profile(sphere, -6, 6);
    for (long long n = -6; n <= 6; ++n) {
        const int expected = (n == 0 || n == -1) ? 1 : 0;
        rec.check(profile[static_cast<size_t>(n + 6)] == expected,
                  "spherical profile at shift " + std::to_string(n));
    }

    const long long window = std::min<long long>(cfg.window, 5);
    const auto closure = thick_closure(cfg.gon, sphere, window);
    const auto all = enumerate_arcs(cfg.gon, window);
    rec.check(std::set<Arc>(closure.begin(), closure.end()) ==
                  std::set<Arc>(all.begin(), all.end()),
              "thick closure misses arcs at window " + std::to_string(window));
    return rec.done();
}

SuiteResult suite_component_census(const VerifyConfig& cfg) {
    Recorder rec("component_census");
    const ArQuiver q = build_ar_quiver(cfg.gon, cfg.window);
    const long long m = cfg.gon.m;
    rec.check(q.component_count == 2 * m + m * (m - 1),
              "component count " + std::to_string(q.component_count));
    std::map<int, std::set<std::tuple<int, int, long long>>> labels;
    for (size_t i = 0; i < q.vertices.size(); ++i)
        labels[q.component[i]].insert({q.vertices[i].hi.copy, q.vertices[i].lo.copy,
                                       ((q.vertices[i].hi.index % 2) + 2) % 2});
    for (const auto& [component, tags] : labels)
        rec.check(tags.size() == 1, "mixed component " + std::to_string(component));
    return rec.done();
}

SuiteResult suite_kupisch_axioms(const VerifyConfig& cfg) {
    Recorder rec("kupisch_axioms");
    const Embedding emb(cfg.squash);
    const auto chain = oracle::SampleChain::build(cfg.gon, emb, cfg.window, 2, 0, 0);
    std::vector<Rat> ts = chain.base();
    for (const Rat& t : ts) rec.check(kupisch(cfg.gon, emb, t + full_turn()) == kupisch(cfg.gon, emb, t),
                                      "periodicity at " + rat_to_string(t));
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const Rat lhs = ts[i] + kupisch(cfg.gon, emb, ts[i]);
        const Rat rhs = ts[i + 1] + kupisch(cfg.gon, emb, ts[i + 1]);
        rec.check(lhs <= rhs, "monotonicity between " + rat_to_string(ts[i]) + " and " +
                                   rat_to_string(ts[i + 1]));
    }
    // Embedding sanity rides along: strict monotonicity inside each copy arc.
    const auto points = enumerate_points(cfg.gon, cfg.window);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        const Rat a = emb.angle(cfg.gon, points[i]);
        const Rat b = emb.angle(cfg.gon, points[i + 1]);
        rec.check(a < b, "embedding order at " + format_point(points[i]));
    }
    for (const Point& z : points) {
        const Rat a = emb.angle(cfg.gon, z);
        rec.check(emb.boundary_angle(cfg.gon, z.copy) < a &&
                      a < emb.boundary_angle(cfg.gon, z.copy + 1),
                  "embedding arc bounds at " + format_point(z));
    }
    return rec.done();
}

SuiteResult suite_field_independence(const VerifyConfig& cfg) {
    Recorder rec("field_independence");
    const auto chain = make_chain(cfg);
    const auto intervals = enumerate_intervals(cfg.gon, cfg.window);
    const long long count = std::min<long long>(cfg.oracle_pair_samples, 400);
    for (const auto& [u, v] : sample_pairs(cfg, intervals, count, 0xf1e1d)) {
        const int over_q = oracle::hom_dim_circle_oracle(chain, u, v, oracle::FieldKind::kRational);
        const int over_p = oracle::hom_dim_circle_oracle(chain, u, v, oracle::FieldKind::kPrime);
        rec.check(over_q == over_p, "hom dims differ at " + pair_tag(u, v));
        const int proj_q =
            oracle::proj_factor_dim_oracle(chain, u, v, cfg.window + 1, oracle::FieldKind::kRational);
        const int proj_p =
            oracle::proj_factor_dim_oracle(chain, u, v, cfg.window + 1, oracle::FieldKind::kPrime);
        rec.check(proj_q == proj_p, "projective factors differ at " + pair_tag(u, v));
    }
    return rec.done();
}

SuiteResult suite_embedding_independence(const VerifyConfig& cfg) {
    Recorder rec("embedding_independence");
    auto verdicts = [](const VerifyConfig& c) {
        std::vector<std::pair<bool, long long>> out;
        for (const SuiteResult& r :
             {suite_hom_dimensions(c), suite_hammock_partition(c), suite_hom_oracle_agreement(c),
              suite_serre_duality(c), suite_functor_identities(c)})
            out.emplace_back(r.pass, r.checked);
        return out;
    };
    VerifyConfig base = cfg;
    base.squash = Embedding::Squash::kHarmonic;
    VerifyConfig alt = cfg;
    alt.squash = Embedding::Squash::kSoft;
    rec.check(verdicts(base) == verdicts(alt), "verdicts changed under the alternate embedding");
    return rec.done();
}

std::vector<SuiteResult> run_all_suites(const VerifyConfig& cfg) {
    return {
        suite_hom_dimensions(cfg),
        suite_hammock_partition(cfg),
        suite_left_intersect_agreement(cfg),
        suite_hom_oracle_agreement(cfg),
        suite_proj_factor_agreement(cfg),
        suite_exactness(cfg),
        suite_mono_epi(cfg),
        suite_uniseriality(cfg),
        suite_composite_vanishing(cfg),
        suite_serre_duality(cfg),
        suite_functor_identities(cfg),
        suite_spherical_thick(cfg),
        suite_component_census(cfg),
        suite_kupisch_axioms(cfg),
        suite_field_independence(cfg),
        suite_embedding_independence(cfg),
    };
}

bool all_passed(const std::vector<SuiteResult>& suites) {
    return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.pass; });
}

std::string suites_to_text(const std::vector<SuiteResult>& suites) {
    std::ostringstream os;
    for (const SuiteResult& s : suites) {
        os << (s.pass ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.checked << " checks)\n";
        for (const std::string& c : s.counterexamples) os << "      counterexample: " << c << "\n";
    }
    os << (all_passed(suites) ? "all suites passed\n" : "SUITE FAILURES PRESENT\n");
    return os.str();
}

std::string suites_to_json(const VerifyConfig& cfg, const std::vector<SuiteResult>& suites) {
    nlohmann::json out;
    out["m"] = cfg.gon.m;
    out["window"] = cfg.window;
    out["field"] = cfg.field == oracle::FieldKind::kRational ? "rational" : "prime";
    out["seed"] = cfg.seed;
    out["pass"] = all_passed(suites);
    out["suites"] = nlohmann::json::array();
    for (const SuiteResult& s : suites)
        out["suites"].push_back({{"name", s.name},
                                 {"pass", s.pass},
                                 {"checked", s.checked},
                                 {"counterexamples", s.counterexamples}});
    return out.dump(2);
}

}  // namespace zgon
