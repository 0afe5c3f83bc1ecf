#include "zgon/oracle/oracle.hpp"

#include "zgon/enumerate.hpp"
#include "zgon/oracle/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zgon::oracle {

namespace {

// Exact half-open endpoints (lo, hi] of a lifted interval.
struct RealSpan {
    Rat lo, hi;
};

RealSpan lift_span(const GonConfig& g, const Embedding& e, const Interval& u, int n) {
    return {e.angle(g, u.start) + Rat(2 * n), e.angle(g, u.end) + Rat(2 * (u.winding + n))};
}

}  // namespace

LineRep realize(const SampleChain& chain, const Interval& u, int n) {
    require_in_family(u);
    const RealSpan s = lift_span(chain.gon(), chain.embedding(), u, n);
    const long long i_lo = chain.index_of(s.lo);
    const long long i_hi = chain.index_of(s.hi);
    if (i_lo < 0 || i_hi < 0)
        throw std::range_error("oracle: interval endpoint is not a chain sample");
    if (i_lo == 0 || i_hi + 1 >= chain.size())
        throw std::range_error("oracle: no sample margin beyond an interval endpoint");
    return LineRep{i_lo + 1, i_hi, s.lo, s.hi};
}

namespace {

template <class F>
int hom_dim_linear_impl(const LineRep& m, const LineRep& n) {
    const long long v_first = std::max(m.first, n.first);
    const long long v_last = std::min(m.last, n.last);
    if (v_last < v_first) return 0;
    SparseSystem<F> sys(static_cast<int>(v_last - v_first + 1));
    auto var = [&](long long i) { return static_cast<int>(i - v_first); };

    // One commuting square per step i -> i+1 with source fibre at i and
    // target fibre at i+1; everything else is a zero map.
    const long long lo = std::max(m.first, n.first - 1);
    const long long hi = std::min(m.last, n.last - 1);
    for (long long i = lo; i <= hi; ++i) {
        typename SparseSystem<F>::Row row;
        if (n.contains(i)) row.emplace_back(var(i), F::one());
        if (m.contains(i + 1)) row.emplace_back(var(i + 1), F::neg(F::one()));
        sys.add_row(std::move(row));
    }
    return sys.nullity();
}

}  // namespace

int hom_dim_linear(const SampleChain& chain, const LineRep& source, const LineRep& target,
                   FieldKind field) {
    (void)chain;
    return field == FieldKind::kRational ? hom_dim_linear_impl<RationalField>(source, target)
                                         : hom_dim_linear_impl<Fp>(source, target);
}

bool left_intersect_oracle(const GonConfig& g, const Embedding& e, const Interval& target,
                           const Interval& source, int n) {
    require_in_family(target);
    require_in_family(source);
    const RealSpan v = lift_span(g, e, target, n);
    const RealSpan u = lift_span(g, e, source, 0);
    // Quantified definition for half-open spans (a,b] and (c,d]:
    //   every point of V \ U must precede every point of U, so V may not
    //   poke out above U:                         b <= d
    //   every point of V must precede every point of U \ V, so U may not
    //   poke out below V:                         a <= c
    //   and the intersection must be nonempty:    c < b
    return v.lo <= u.lo && u.lo < v.hi && v.hi <= u.hi;
}

int hom_dim_circle_oracle(const SampleChain& chain, const Interval& source,
                          const Interval& target, FieldKind field) {
    int total = 0;
    for (int n = -3; n <= 3; ++n) {
        const int d = hom_dim_linear(chain, realize(chain, source, 0), realize(chain, target, n),
                                     field);
        if (d != 0 && n != 0 && n != -1)
            throw std::logic_error("oracle: Hom summand outside windings {0,-1}");
        total += d;
    }
    return total;
}

LineMorphism standard_morphism(const SampleChain& chain, const Interval& source, int source_n,
                               const Interval& target, int target_n) {
    const LineRep m = realize(chain, source, source_n);
    const LineRep n = realize(chain, target, target_n);
    LineMorphism phi;  // zero unless the left intersection is nonempty
    if (n.lo <= m.lo && m.lo < n.hi && n.hi <= m.hi) {
        phi.first = chain.index_of(m.lo) + 1;  // support (m.lo, n.hi]
        phi.last = chain.index_of(n.hi);
    }
    // Naturality: each commuting square between consecutive samples.
    const long long lo = std::min(m.first, n.first) - 1;
    const long long hi = std::max(m.last, n.last);
    for (long long i = lo; i <= hi; ++i) {
        if (!(m.contains(i) && n.contains(i + 1))) continue;  // zero-shaped square
        const int lhs = (n.contains(i) ? 1 : 0) * (phi.supported(i) ? 1 : 0);
        const int rhs = (phi.supported(i + 1) ? 1 : 0) * (m.contains(i + 1) ? 1 : 0);
        if (lhs != rhs) throw std::logic_error("oracle: standard morphism is not natural");
    }
    return phi;
}

int proj_factor_dim_oracle(const SampleChain& chain, const Interval& source,
                           const Interval& target, long long window, FieldKind field) {
    require_in_family(source);
    require_in_family(target);
    const GonConfig& g = chain.gon();
    const Embedding& e = chain.embedding();
    const Point witness = pred(source.end);
    if (witness.index < -window || witness.index > window)
        throw std::range_error("oracle: window misses the canonical projective witness");

    const LineRep m0 = realize(chain, source, 0);
    std::map<int, std::vector<std::vector<int>>> composites;  // winding -> vectors

    for (const Point& z : enumerate_points(g, window)) {
        const Interval p = projective_module(z);
        for (int a = -3; a <= 3; ++a) {
            if (!left_intersect_oracle(g, e, p, source, a)) continue;
            const LineMorphism into = standard_morphism(chain, source, 0, p, a);
            for (int b = -3; b <= 3; ++b) {
                if (!left_intersect_oracle(g, e, target, p, b)) continue;
                const int n = a + b;
                if (n < -3 || n > 3) continue;
                const LineMorphism out = standard_morphism(chain, p, a, target, n);
                const LineRep nn = realize(chain, target, n);
                const long long v_first = std::max(m0.first, nn.first);
                const long long v_last = std::min(m0.last, nn.last);
                if (v_last < v_first) continue;
                std::vector<int> vec(static_cast<size_t>(v_last - v_first + 1), 0);
                bool nonzero = false;
                for (long long i = v_first; i <= v_last; ++i)
                    if (into.supported(i) && out.supported(i)) {
                        vec[static_cast<size_t>(i - v_first)] = 1;
                        nonzero = true;
                    }
                if (nonzero) composites[n].push_back(std::move(vec));
            }
        }
    }

    int total = 0;
    for (auto& [n, vecs] : composites)
        total += field == FieldKind::kRational ? span_rank<RationalField>(vecs)
                                               : span_rank<Fp>(vecs);
    return total;
}

namespace {

int unique_winding(const GonConfig& g, const Embedding& e, const Interval& target,
                   const Interval& source) {
    const bool at0 = left_intersect_oracle(g, e, target, source, 0);
    const bool at1 = left_intersect_oracle(g, e, target, source, -1);
    if (at0 == at1)
        throw std::domain_error("oracle: expected a one-dimensional Hom with unique winding");
    return at0 ? 0 : -1;
}

}  // namespace

bool composite_nonzero_oracle(const SampleChain& chain, const Interval& source,
                              const Interval& via, const Interval& target) {
    const GonConfig& g = chain.gon();
    const Embedding& e = chain.embedding();
    const int n1 = unique_winding(g, e, via, source);
    const int n2 = unique_winding(g, e, target, via);
    const LineMorphism f = standard_morphism(chain, source, 0, via, n1);
    const LineMorphism h = standard_morphism(chain, via, n1, target, n1 + n2);
    if (f.last < f.first || h.last < h.first) return false;
    return std::max(f.first, h.first) <= std::min(f.last, h.last);
}

CircleRep realize_circle(const SampleChain& chain, const Interval& u) {
    require_in_family(u);
    const RealSpan s = lift_span(chain.gon(), chain.embedding(), u, 0);
    CircleRep r;
    r.fibers.resize(chain.base().size());
    for (size_t j = 0; j < chain.base().size(); ++j)
        for (int k = 0; k <= 1; ++k) {
            const Rat x = chain.base()[j] + Rat(2 * k);
            if (s.lo < x && x <= s.hi) r.fibers[j].push_back(x);
        }
    return r;
}

namespace {

// Dense integer matrix with explicit shape; fibre dimensions are often zero
// and the zero-width cases must still multiply and compare correctly.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    int& at(size_t r, size_t c) { return a[r * cols + c]; }
    int at(size_t r, size_t c) const { return a[r * cols + c]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Mat& lhs, const Mat& rhs) {
    Mat out(lhs.rows, rhs.cols);
    for (size_t i = 0; i < lhs.rows; ++i)
        for (size_t k = 0; k < lhs.cols; ++k)
            if (lhs.at(i, k) != 0)
                for (size_t j = 0; j < rhs.cols; ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    return out;
}

bool mat_is_zero(const Mat& m) {
    for (int v : m.a)
        if (v != 0) return false;
    return true;
}

std::vector<std::vector<int>> mat_rows(const Mat& m) {
    std::vector<std::vector<int>> out(m.rows, std::vector<int>(m.cols, 0));
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c) out[r][c] = m.at(r, c);
    return out;
}

size_t find_fiber_index(const std::vector<Rat>& fiber, const Rat& x) {
    for (size_t i = 0; i < fiber.size(); ++i)
        if (fiber[i] == x) return i;
    throw std::logic_error("oracle: lift missing from fibre");
}

// Transition matrix of a circle realisation from base sample j to the next
// one (wrapping adds a full turn): lifts advance by the sample gap and drop
// off the end of the interval.
Mat circle_step(const SampleChain& chain, const CircleRep& r, size_t j) {
    const size_t count = chain.base().size();
    const size_t jn = (j + 1) % count;
    const Rat delta = (j + 1 < count) ? chain.base()[jn] - chain.base()[j]
                                      : chain.base()[0] + Rat(2) - chain.base()[j];
    Mat step(r.fibers[jn].size(), r.fibers[j].size());
    for (size_t c = 0; c < r.fibers[j].size(); ++c) {
        const Rat moved = r.fibers[j][c] + delta;
        for (size_t rr = 0; rr < r.fibers[jn].size(); ++rr)
            if (r.fibers[jn][rr] == moved) step.at(rr, c) = 1;
    }
    return step;
}

// Circle-level standard morphism at the given winding, with the target in
// its canonical lift. Checks all naturality squares, including the wrap.
std::vector<Mat> circle_standard(const SampleChain& chain, const Interval& source,
                                 const CircleRep& rs, const Interval& target,
                                 const CircleRep& rt, int n) {
    const GonConfig& g = chain.gon();
    const Embedding& e = chain.embedding();
    const RealSpan u = lift_span(g, e, source, 0);
    const RealSpan v = lift_span(g, e, target, n);
    const bool hit = v.lo <= u.lo && u.lo < v.hi && v.hi <= u.hi;

    const size_t count = chain.base().size();
    std::vector<Mat> phi(count);
    for (size_t j = 0; j < count; ++j) {
        phi[j] = Mat(rt.fibers[j].size(), rs.fibers[j].size());
        if (!hit) continue;
        for (size_t c = 0; c < rs.fibers[j].size(); ++c) {
            const Rat b = rs.fibers[j][c];
            if (u.lo < b && b <= v.hi) {  // support (u.lo, v.hi]
                const size_t row = find_fiber_index(rt.fibers[j], b - Rat(2 * n));
                phi[j].at(row, c) = 1;
            }
        }
    }
    for (size_t j = 0; j < count; ++j) {
        const size_t jn = (j + 1) % count;
        const Mat lhs = mat_mul(circle_step(chain, rt, j), phi[j]);
        const Mat rhs = mat_mul(phi[jn], circle_step(chain, rs, j));
        if (lhs != rhs) throw std::logic_error("oracle: circle standard morphism not natural");
    }
    return phi;
}

int rank_over(FieldKind field, const Mat& m) {
    const auto rows = mat_rows(m);
    return field == FieldKind::kRational ? dense_rank<RationalField>(rows) : dense_rank<Fp>(rows);
}

}  // namespace

bool exactness_check(const SampleChain& chain, const Interval& source,
                     const std::vector<Interval>& middles, const Interval& target,
                     FieldKind field) {
    if (middles.empty() || middles.size() > 2)
        throw std::invalid_argument("exactness_check: need one or two middle terms");
    require_in_family(source);
    require_in_family(target);
    for (const Interval& m : middles) require_in_family(m);

    const GonConfig& g = chain.gon();
    const Embedding& e = chain.embedding();
    const CircleRep rs = realize_circle(chain, source);
    const CircleRep rt = realize_circle(chain, target);

    std::vector<CircleRep> rm;
    std::vector<std::vector<Mat>> into, out;
    for (const Interval& mid : middles) {
        rm.push_back(realize_circle(chain, mid));
        const int nf = unique_winding(g, e, mid, source);
        const int ng = unique_winding(g, e, target, mid);
        into.push_back(circle_standard(chain, source, rs, mid, rm.back(), nf));
        out.push_back(circle_standard(chain, mid, rm.back(), target, rt, ng));
    }

    const size_t count = chain.base().size();
    for (size_t j = 0; j < count; ++j) {
        size_t dim_mid = 0;
        for (const CircleRep& r : rm) dim_mid += r.fibers[j].size();
        const size_t du = rs.fibers[j].size();
        const size_t dv = rt.fibers[j].size();
        if (du + dv != dim_mid) return false;

        Mat a(dim_mid, du);
        Mat b(dv, dim_mid);
        size_t offset = 0;
        for (size_t t = 0; t < rm.size(); ++t) {
            const int sign = (middles.size() == 2 && t == 0) ? -1 : 1;
            for (size_t r = 0; r < rm[t].fibers[j].size(); ++r) {
                for (size_t c = 0; c < du; ++c) a.at(offset + r, c) = into[t][j].at(r, c);
                for (size_t c = 0; c < dv; ++c) b.at(c, offset + r) = sign * out[t][j].at(c, r);
            }
            offset += rm[t].fibers[j].size();
        }

        if (!mat_is_zero(mat_mul(b, a))) return false;
        const int rank_a = rank_over(field, a);
        const int rank_b = rank_over(field, b);
        if (rank_a != static_cast<int>(du)) return false;       // left map injective
        if (rank_b != static_cast<int>(dv)) return false;       // right map surjective
        if (rank_a + rank_b != static_cast<int>(dim_mid)) return false;  // image = kernel
    }
    return true;
}

}  // namespace zgon::oracle
