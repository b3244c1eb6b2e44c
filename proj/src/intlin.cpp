#include "lh4/intlin.hpp"

#include <algorithm>

namespace lh4 {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::column(int c) const {
    std::vector<Int> col(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) col[static_cast<size_t>(r)] = at(r, c);
    return col;
}

std::vector<Int> IntMatrix::multiply(std::span<const Int> v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMatrix: vector dimension mismatch");
    std::vector<Int> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Int acc = 0;
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = std::move(acc);
    }
    return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: matrix dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += a * other.at(k, c);
        }
    }
    return out;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row(int a, int b, const Int& k) {
    for (int c = 0; c < cols_; ++c) at(a, c) += k * at(b, c);
}

void IntMatrix::add_col(int a, int b, const Int& k) {
    for (int r = 0; r < rows_; ++r) at(r, a) += k * at(r, b);
}

void IntMatrix::negate_row(int r) {
    for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(int c) {
    for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

namespace {

// Smallest nonzero |entry| in the submatrix with corner (t, t), if any.
std::optional<std::pair<int, int>> min_nonzero(const IntMatrix& d, int t) {
    std::optional<std::pair<int, int>> best;
    Int best_abs = 0;
    for (int r = t; r < d.rows(); ++r) {
        for (int c = t; c < d.cols(); ++c) {
            if (d.at(r, c) == 0) continue;
            Int a = abs(d.at(r, c));
            if (!best || a < best_abs) {
                best = {{r, c}};
                best_abs = a;
            }
        }
    }
    return best;
}

bool row_col_cleared(const IntMatrix& d, int t) {
    for (int r = t + 1; r < d.rows(); ++r)
        if (d.at(r, t) != 0) return false;
    for (int c = t + 1; c < d.cols(); ++c)
        if (d.at(t, c) != 0) return false;
    return true;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    SNFResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& p = res.p;
    IntMatrix& d = res.d;
    IntMatrix& q = res.q;

    const int k = std::min(m, n);
    for (int t = 0; t < k; ++t) {
        for (;;) {
            auto pos = min_nonzero(d, t);
            if (!pos) break;  // submatrix is zero; remaining divisors are 0
            d.swap_rows(t, pos->first);
            p.swap_rows(t, pos->first);
            d.swap_cols(t, pos->second);
            q.swap_cols(t, pos->second);

            // Kill the column and row of the pivot; truncated division
            // leaves remainders strictly smaller than the pivot, so
            // re-picking the minimum terminates.
            for (int r = t + 1; r < m; ++r) {
                if (d.at(r, t) == 0) continue;
                Int quo = d.at(r, t) / d.at(t, t);
                if (quo != 0) {
                    d.add_row(r, t, -quo);
                    p.add_row(r, t, -quo);
                }
            }
            for (int c = t + 1; c < n; ++c) {
                if (d.at(t, c) == 0) continue;
                Int quo = d.at(t, c) / d.at(t, t);
                if (quo != 0) {
                    d.add_col(c, t, -quo);
                    q.add_col(c, t, -quo);
                }
            }
            if (!row_col_cleared(d, t)) continue;

            // Pivot must divide every remaining interior entry; merging
            // an offending row into row t lets the next pass shrink it.
            bool divides_all = true;
            for (int r = t + 1; r < m && divides_all; ++r) {
                for (int c = t + 1; c < n; ++c) {
                    if (d.at(r, c) % d.at(t, t) != 0) {
                        d.add_row(t, r, 1);
                        p.add_row(t, r, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }
    }

    for (int t = 0; t < k; ++t) {
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    return res;
}

HNFResult hermite_normal_form(const IntMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    HNFResult res{a, IntMatrix::identity(n)};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    int c = 0;
    for (int r = 0; r < m && c < n; ++r) {
        int nz = -1;
        for (int j = c; j < n; ++j) {
            if (h.at(r, j) != 0) {
                nz = j;
                break;
            }
        }
        if (nz < 0) continue;
        h.swap_cols(c, nz);
        u.swap_cols(c, nz);
        for (int j = c + 1; j < n; ++j) {
            // Euclid on (h[r][c], h[r][j]) by column operations.
            while (h.at(r, j) != 0) {
                Int quo = h.at(r, j) / h.at(r, c);
                if (quo != 0) {
                    h.add_col(j, c, -quo);
                    u.add_col(j, c, -quo);
                }
                if (h.at(r, j) == 0) break;
                h.swap_cols(c, j);
                u.swap_cols(c, j);
            }
        }
        if (h.at(r, c) < 0) {
            h.negate_col(c);
            u.negate_col(c);
        }
        for (int j = 0; j < c; ++j) {
            Int quo = floor_div(h.at(r, j), h.at(r, c));
            if (quo != 0) {
                h.add_col(j, c, -quo);
                u.add_col(j, c, -quo);
            }
        }
        ++c;
    }
    return res;
}

std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    const int n = a.cols();
    const int k = std::min(a.rows(), n);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < n; ++j) {
        if (j < k && snf.d.at(j, j) != 0) continue;
        basis.push_back(snf.q.column(j));
    }
    return basis;
}

std::optional<DioSolution> solve_diophantine(const IntMatrix& a, std::span<const Int> b) {
    const int m = a.rows();
    const int n = a.cols();
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_diophantine: rhs dimension mismatch");

    SNFResult snf = smith_normal_form(a);
    std::vector<Int> bp = snf.p.multiply(b);
    const int k = std::min(m, n);

    std::vector<Int> y(static_cast<size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
        const Int di = (i < k) ? snf.d.at(i, i) : Int(0);
        if (di != 0) {
            if (bp[static_cast<size_t>(i)] % di != 0) return std::nullopt;
            y[static_cast<size_t>(i)] = bp[static_cast<size_t>(i)] / di;
        } else if (bp[static_cast<size_t>(i)] != 0) {
            return std::nullopt;
        }
    }

    DioSolution sol;
    sol.particular = snf.q.multiply(y);
    for (int j = 0; j < n; ++j) {
        if (j < k && snf.d.at(j, j) != 0) continue;
        sol.kernel_basis.push_back(snf.q.column(j));
    }
    return sol;
}

LatticeReduction lattice_reduce(std::span<const Int> v, const std::vector<std::vector<Int>>& gens) {
    std::vector<Int> rep(v.begin(), v.end());
    const int dim = static_cast<int>(v.size());
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("lattice_reduce: generator dimension mismatch");
    }
    if (!gens.empty()) {
        IntMatrix gmat(dim, static_cast<int>(gens.size()));
        for (int c = 0; c < static_cast<int>(gens.size()); ++c)
            for (int r = 0; r < dim; ++r) gmat.at(r, c) = gens[static_cast<size_t>(c)][static_cast<size_t>(r)];
        IntMatrix h = hermite_normal_form(gmat).h;
        // Pivots sit at strictly increasing rows; reducing top row down
        // makes the representative independent of the coset member.
        int col = 0;
        for (int r = 0; r < dim && col < h.cols(); ++r) {
            if (h.at(r, col) == 0) continue;
            Int quo = floor_div(rep[static_cast<size_t>(r)], h.at(r, col));
            if (quo != 0) {
                for (int i = 0; i < dim; ++i) rep[static_cast<size_t>(i)] -= quo * h.at(i, col);
            }
            ++col;
        }
    }
    bool zero = std::all_of(rep.begin(), rep.end(), [](const Int& x) { return x == 0; });
    return {std::move(rep), zero};
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    // Bareiss fraction-free elimination; every division is exact.
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (w.at(t, t) == 0) {
            int swap = -1;
            for (int r = t + 1; r < n; ++r) {
                if (w.at(r, t) != 0) {
                    swap = r;
                    break;
                }
            }
            if (swap < 0) return 0;
            w.swap_rows(t, swap);
            sign = -sign;
        }
        for (int r = t + 1; r < n; ++r) {
            for (int c = t + 1; c < n; ++c) {
                w.at(r, c) = (w.at(r, c) * w.at(t, t) - w.at(r, t) * w.at(t, c)) / prev;
            }
            w.at(r, t) = 0;
        }
        prev = w.at(t, t);
    }
    return sign * w.at(n - 1, n - 1);
}

}  // namespace lh4
