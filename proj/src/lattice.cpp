#include "sunit/lattice.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace sunit {

namespace {

size_t rows(const Mat& A) { return A.size(); }
size_t cols(const Mat& A) { return A.empty() ? 0 : A[0].size(); }

Mat identity(size_t n) {
    Mat I(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

Mat matmul(const Mat& A, const Mat& B) {
    size_t m = rows(A), k = cols(A), n = cols(B);
    assert(k == rows(B));
    Mat C(m, std::vector<Int>(n, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(cols(A), std::vector<Int>(rows(A)));
    for (size_t i = 0; i < rows(A); ++i)
        for (size_t j = 0; j < cols(A); ++j) T[j][i] = A[i][j];
    return T;
}

}  // namespace

Mat hnf(const Mat& A, Mat* U) {
    Mat H = A;
    size_t m = rows(H), n = cols(H);
    Mat T = identity(m);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t piv = m;
        for (size_t i = r; i < m; ++i)
            if (H[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        std::swap(H[piv], H[r]);
        std::swap(T[piv], T[r]);
        // clear entries below the pivot with unimodular 2x2 combinations
        for (size_t i = r + 1; i < m; ++i) {
            while (H[i][c] != 0) {
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                           H[r][c].get_mpz_t(), H[i][c].get_mpz_t());
                Int a = H[r][c] / g, b = H[i][c] / g;
                for (size_t j = 0; j < n; ++j) {
                    Int hr = s * H[r][j] + t * H[i][j];
                    Int hi = -b * H[r][j] + a * H[i][j];
                    H[r][j] = hr;
                    H[i][j] = hi;
                }
                for (size_t j = 0; j < m; ++j) {
                    Int tr = s * T[r][j] + t * T[i][j];
                    Int ti = -b * T[r][j] + a * T[i][j];
                    T[r][j] = tr;
                    T[i][j] = ti;
                }
            }
        }
        if (H[r][c] < 0) {
            for (size_t j = 0; j < n; ++j) H[r][j] = -H[r][j];
            for (size_t j = 0; j < m; ++j) T[r][j] = -T[r][j];
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = 0; j < n; ++j) H[i][j] -= q * H[r][j];
            for (size_t j = 0; j < m; ++j) T[i][j] -= q * T[r][j];
        }
        ++r;
    }
    if (U) *U = std::move(T);
    return H;
}

Mat kernel_basis(const Mat& A) {
    Mat U;
    Mat H = hnf(A, &U);
    Mat K;
    for (size_t i = 0; i < rows(H); ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols(H); ++j)
            if (H[i][j] != 0) {
                zero = false;
                break;
            }
        if (zero) K.push_back(U[i]);
    }
    return K;
}

bool same_lattice(const Mat& A, const Mat& B) {
    return hnf(A) == hnf(B);
}

namespace {

// Exact Gram-Schmidt data for the quadratic form W: mu[i][j] (j < i) and
// squared norms bstar[i], as rationals.
struct Gso {
    std::vector<std::vector<Rat>> mu, r;
    std::vector<Rat> bstar;
};

Gso compute_gso(const Mat& W) {
    size_t d = W.size();
    Gso g;
    g.mu.assign(d, std::vector<Rat>(d, 0));
    g.r.assign(d, std::vector<Rat>(d, 0));
    g.bstar.assign(d, 0);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Rat rij(W[i][j]);
            for (size_t k = 0; k < j; ++k) rij -= g.mu[j][k] * g.r[i][k];
            g.r[i][j] = rij;
            if (j < i) {
                if (g.bstar[j] == 0)
                    throw std::invalid_argument("gram_lll: form is singular");
                g.mu[i][j] = rij / g.bstar[j];
            } else {
                g.bstar[i] = rij;
            }
        }
    }
    return g;
}

Int round_nearest(const Rat& q) {
    // floor(q + 1/2)
    Int num = q.get_num() * 2 + q.get_den();
    Int den = q.get_den() * 2;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

// b_k -= q*b_j on the Gram matrix and the transformation.
void row_op(Mat& W, Mat& U, size_t k, size_t j, const Int& q) {
    size_t d = W.size();
    Int wkk = W[k][k] - 2 * q * W[k][j] + q * q * W[j][j];
    for (size_t i = 0; i < d; ++i) {
        if (i == k) continue;
        W[k][i] -= q * W[j][i];
        W[i][k] = W[k][i];
    }
    W[k][k] = wkk;
    for (size_t i = 0; i < U[k].size(); ++i) U[k][i] -= q * U[j][i];
}

void swap_rows(Mat& W, Mat& U, size_t a, size_t b) {
    std::swap(U[a], U[b]);
    std::swap(W[a], W[b]);
    for (auto& row : W) std::swap(row[a], row[b]);
}

}  // namespace

Mat gram_lll(const Mat& G) {
    size_t d = G.size();
    Mat U = identity(d);
    if (d <= 1) return U;
    Mat W = G;
    Gso g = compute_gso(W);
    const Rat delta(3, 4);
    size_t k = 1;
    while (k < d) {
        for (size_t jj = k; jj-- > 0;) {
            Int q = round_nearest(g.mu[k][jj]);
            if (q != 0) {
                row_op(W, U, k, jj, q);
                Rat qr(q);
                for (size_t l = 0; l < jj; ++l)
                    g.mu[k][l] -= qr * g.mu[jj][l];
                g.mu[k][jj] -= qr;
            }
        }
        Rat lhs = g.bstar[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bstar[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            swap_rows(W, U, k, k - 1);
            g = compute_gso(W);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return U;
}

IntegerLattice lll_reduce(const IntegerLattice& L) {
    if (L.dim == 0) return L;
    Mat G = matmul(L.basis, transpose(L.basis));
    Mat U = gram_lll(G);
    return IntegerLattice{L.dim, matmul(U, L.basis)};
}

namespace {

// LDL^T data of an SPD form: q[i][i] = d_i > 0 and q[i][j] for j > i, so
// that x^T W x = sum_i d_i (x_i + sum_{j>i} q[i][j] x_j)^2.
std::vector<std::vector<Rat>> ldl(const Mat& W) {
    size_t d = W.size();
    std::vector<std::vector<Rat>> q(d, std::vector<Rat>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) q[i][j] = Rat(W[i][j]);
    for (size_t i = 0; i < d; ++i) {
        if (q[i][i] <= 0)
            throw std::invalid_argument(
                "enumerate_ellipsoid: form is not positive definite");
        for (size_t j = i + 1; j < d; ++j) q[i][j] /= q[i][i];
        for (size_t k = i + 1; k < d; ++k)
            for (size_t l = k; l < d; ++l)
                q[k][l] -= q[i][k] * q[i][i] * q[i][l];
    }
    return q;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return r;
}

struct FpEnum {
    const std::vector<std::vector<Rat>>& q;
    const Mat& rbasis;  // reduced basis rows (ambient)
    size_t d;
    size_t cap;
    CandidateBudget* budget;
    std::vector<Int> x;
    std::vector<std::vector<Int>>& out;

    // level i with remaining budget T_i; deeper levels already fixed
    void recurse(size_t level, const Rat& T) {
        size_t i = level;
        // U_i = sum_{j>i} q[i][j] * x_j
        Rat Ui(0);
        for (size_t j = i + 1; j < d; ++j)
            if (x[j] != 0) Ui += q[i][j] * Rat(x[j]);
        const Rat& di = q[i][i];
        Rat r2 = T / di;
        if (r2 < 0) return;
        Int z = isqrt(floor_rat(r2));
        // smallest integer xi with d_i (xi + U_i)^2 <= T
        Int xi = ceil_rat(-Ui) - z - 1;
        auto ok = [&](const Int& v) {
            Rat s = Rat(v) + Ui;
            return di * s * s <= T;
        };
        while (!ok(xi)) xi += 1;
        for (; ok(xi); xi += 1) {
            Rat s = Rat(xi) + Ui;
            Rat rem = T - di * s * s;
            x[i] = xi;
            if (i == 0) {
                emit();
            } else {
                recurse(i - 1, rem);
            }
        }
        x[i] = 0;
    }

    void emit() {
        if (budget) budget->consume();
        if (out.size() >= cap)
            throw candidate_overflow_error("FP candidate cap exceeded");
        std::vector<Int> v(rbasis.empty() ? 0 : rbasis[0].size(), 0);
        for (size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] += x[i] * rbasis[i][j];
        }
        out.push_back(std::move(v));
    }
};

}  // namespace

std::vector<std::vector<Int>> enumerate_ellipsoid(const IntegerLattice& L,
                                                  const IntegerEllipsoid& E,
                                                  size_t cap,
                                                  CandidateBudget* budget) {
    std::vector<std::vector<Int>> out;
    if (L.dim == 0) {
        if (E.bound >= 0) {
            if (budget) budget->consume();
            if (cap == 0)
                throw candidate_overflow_error("FP candidate cap exceeded");
            out.push_back({});
        }
        return out;
    }
    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = 0; j < i; ++j)
            if (E.gram[i][j] != E.gram[j][i])
                throw std::invalid_argument(
                    "enumerate_ellipsoid: gram matrix not symmetric");
    if (E.bound < 0) return out;

    Mat G = matmul(matmul(L.basis, E.gram), transpose(L.basis));
    Mat U = gram_lll(G);
    Mat W = matmul(matmul(U, G), transpose(U));
    Mat R = matmul(U, L.basis);
    auto q = ldl(W);

    FpEnum fe{q, R, L.dim, cap, budget, std::vector<Int>(L.dim, 0), out};
    fe.recurse(L.dim - 1, Rat(E.bound));
    return out;
}

}  // namespace sunit
