#pragma once
#include <algorithm>
#include <utility>
#include <vector>

#include "ncres/errors.hpp"

namespace ncres {

// Square row-compressed matrix over an exact ring; zero entries are never stored.
template <class T>
class SparseMatrix {
public:
    using Entry = std::pair<int, T>;
    using Row = std::vector<Entry>;  // sorted by column

    SparseMatrix() = default;
    explicit SparseMatrix(int dim) : rows_(static_cast<std::size_t>(dim)) {}

    static SparseMatrix identity(int dim, const T& one) {
        SparseMatrix m(dim);
        for (int k = 0; k < dim; ++k) m.rows_[k].emplace_back(k, one);
        return m;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const Row& row(int r) const { return rows_[r]; }
    const std::vector<Row>& rows() const { return rows_; }
    bool is_zero() const {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }
    std::size_t nnz() const {
        std::size_t n = 0;
        for (auto& r : rows_) n += r.size();
        return n;
    }

    T at(int r, int c) const {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? it->second : T{};
    }
    const T* find(int r, int c) const {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    }

    // Adds v at (r, c); rows must be finalized before use if inserted out of order.
    void add(int r, int c, const T& v) {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second = it->second + v;
            if (it->second.is_zero()) row.erase(it);
        } else if (!v.is_zero()) {
            row.insert(it, Entry{c, v});
        }
    }

    template <class F>
    auto map(F&& fn) const {
        using U = decltype(fn(std::declval<const T&>()));
        SparseMatrix<U> out(dim());
        for (int r = 0; r < dim(); ++r)
            for (auto& [c, v] : rows_[r]) {
                U u = fn(v);
                if (!u.is_zero()) out.push_back_unchecked(r, c, std::move(u));
            }
        return out;
    }

    void push_back_unchecked(int r, int c, T v) { rows_[r].emplace_back(c, std::move(v)); }

    SparseMatrix& operator+=(const SparseMatrix& o) {
        check(o);
        for (int r = 0; r < dim(); ++r) rows_[r] = merge(rows_[r], o.rows_[r], false);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& o) {
        check(o);
        for (int r = 0; r < dim(); ++r) rows_[r] = merge(rows_[r], o.rows_[r], true);
        return *this;
    }
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

    template <class U>
    friend auto operator*(const SparseMatrix& a, const SparseMatrix<U>& b) {
        using R = decltype(std::declval<const T&>() * std::declval<const U&>());
        if (a.dim() != b.dim()) throw ShapeError("matrix dimension mismatch");
        int n = a.dim();
        SparseMatrix<R> out(n);
        std::vector<R> acc(static_cast<std::size_t>(n));
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        std::vector<int> cols;
        for (int r = 0; r < n; ++r) {
            cols.clear();
            for (auto& [k, av] : a.rows_[r])
                for (auto& [c, bv] : b.row(k)) {
                    if (!used[c]) {
                        used[c] = 1;
                        cols.push_back(c);
                        acc[c] = av * bv;
                    } else {
                        acc[c] = acc[c] + av * bv;
                    }
                }
            std::sort(cols.begin(), cols.end());
            for (int c : cols) {
                if (!acc[c].is_zero()) out.push_back_unchecked(r, c, std::move(acc[c]));
                acc[c] = R{};
                used[c] = 0;
            }
        }
        return out;
    }

    template <class S>
    SparseMatrix scaled(const S& s) const {
        SparseMatrix out(dim());
        for (int r = 0; r < dim(); ++r)
            for (auto& [c, v] : rows_[r]) {
                T u = v * s;
                if (!u.is_zero()) out.push_back_unchecked(r, c, std::move(u));
            }
        return out;
    }

    SparseMatrix operator-() const {
        SparseMatrix out = *this;
        for (auto& row : out.rows_)
            for (auto& e : row) e.second = -e.second;
        return out;
    }

    T trace() const {
        T t{};
        for (int r = 0; r < dim(); ++r)
            if (const T* v = find(r, r)) t = t + *v;
        return t;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.rows_ == b.rows_; }

private:
    void check(const SparseMatrix& o) const {
        if (dim() != o.dim()) throw ShapeError("matrix dimension mismatch");
    }
    static Row merge(const Row& x, const Row& y, bool subtract) {
        Row out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                out.push_back(x[i++]);
            } else if (i == x.size() || y[j].first < x[i].first) {
                out.emplace_back(y[j].first, subtract ? -y[j].second : y[j].second);
                ++j;
            } else {
                T v = subtract ? x[i].second - y[j].second : x[i].second + y[j].second;
                if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Row> rows_;
};

// tr(A * B) without forming the product.
template <class T, class U, class Acc>
void trace_of_product(const SparseMatrix<T>& a, const SparseMatrix<U>& b, Acc&& acc) {
    if (a.dim() != b.dim()) throw ShapeError("matrix dimension mismatch");
    for (int r = 0; r < a.dim(); ++r)
        for (auto& [c, av] : a.row(r))
            if (const U* bv = b.find(c, r)) acc(av, *bv);
}

}  // namespace ncres
