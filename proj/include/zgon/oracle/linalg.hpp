#pragma once

#include "zgon/oracle/field.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace zgon::oracle {

/// Homogeneous sparse linear system over a field; rows accumulate and the
/// rank is computed by elimination on demand. Sized for the oracle's
/// commuting-square systems: a few hundred variables, rows with two entries.
template <class F>
class SparseSystem {
public:
    using Elem = typename F::Elem;
    using Row = std::vector<std::pair<int, Elem>>;  // (var, coeff), sorted by var

    explicit SparseSystem(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }

    void add_row(Row row) {
        normalize(row);
        if (!row.empty()) pending_.push_back(std::move(row));
    }

    int rank() {
        for (Row& r : pending_) reduce_and_insert(std::move(r));
        pending_.clear();
        return static_cast<int>(pivots_.size());
    }

    int nullity() { return nvars_ - rank(); }

private:
    static void normalize(Row& row) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Row out;
        for (const auto& [var, c] : row) {
            if (!out.empty() && out.back().first == var)
                out.back().second = F::add(out.back().second, c);
            else
                out.emplace_back(var, c);
        }
        std::erase_if(out, [](const auto& e) { return F::is_zero(e.second); });
        row = std::move(out);
    }

    void reduce_and_insert(Row row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            const Row& pivot = it->second;
            const Elem factor = F::div(row.front().second, pivot.front().second);
            Row next;
            size_t i = 0, j = 0;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || pivot[j].first < row[i].first) {
                    next.emplace_back(pivot[j].first, F::neg(F::mul(factor, pivot[j].second)));
                    ++j;
                } else {
                    const Elem c = F::sub(row[i].second, F::mul(factor, pivot[j].second));
                    if (!F::is_zero(c)) next.emplace_back(row[i].first, c);
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
        }
    }

    int nvars_;
    std::vector<Row> pending_;
    std::map<int, Row> pivots_;  // leading var -> reduced row
};

/// Rank of a small dense integer matrix over F.
template <class F>
int dense_rank(const std::vector<std::vector<int>>& m) {
    using Elem = typename F::Elem;
    if (m.empty()) return 0;
    std::vector<std::vector<Elem>> a;
    for (const auto& row : m) {
        std::vector<Elem> r;
        for (int v : row) r.push_back(F::from_int(v));
        a.push_back(std::move(r));
    }
    const size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && F::is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == static_cast<size_t>(rank) || F::is_zero(a[r][col])) continue;
            const Elem f = F::div(a[r][col], a[rank][col]);
            for (size_t c = col; c < cols; ++c) a[r][c] = F::sub(a[r][c], F::mul(f, a[rank][c]));
        }
        ++rank;
    }
    return rank;
}

/// Rank of a set of dense integer vectors over F.
template <class F>
int span_rank(const std::vector<std::vector<int>>& vectors) {
    return dense_rank<F>(vectors);
}

}  // namespace zgon::oracle
