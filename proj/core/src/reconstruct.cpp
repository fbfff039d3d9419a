#include "hodge/reconstruct.hpp"

#include <vector>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// One affine scalar c + g . vec(X) in the unknown cross block X (l1 x ls,
// row-major flattening).
struct Aff {
    Q c;
    std::vector<Q> g;

    explicit Aff(int dim) : g(dim, Q(0)) {}
};

// Equation accumulator over theta = (vec(X), lambda_sub, lambda_quot).
struct System {
    int G, N;
    std::vector<std::vector<Q>> rows;
    std::vector<Q> rhs;

    System(int unknowns, int total) : G(unknowns), N(total) {}

    void add(const std::vector<Q>& row, const Q& b) {
        rows.push_back(row);
        rhs.push_back(b);
    }
};

// The one-dimensional kernel of the kill system: rows of `known` are the
// fully known rows of the frame minor, columns its trailing columns.
std::vector<Q> kill_vector(const MatQ& known) {
    auto basis = kernel_basis(known);
    if (basis.size() != 1)
        throw DataInconsistent("frame reduction is singular");
    return basis[0];
}

class BlockSolver {
public:
    BlockSolver(const ForwardBundle& wb, const SemistableShape& sh, MatQ L0)
        : wb_(wb),
          sh_(sh),
          L0_(std::move(L0)),
          n_(sh.n()),
          s_(sh.s()),
          l1_(sh.lengths().front()),
          ls_(sh.lengths().back()),
          k_(n_ - ls_),
          G_(l1_ * ls_),
          N_(G_ + ls_ + l1_),
          sys_(G_, N_) {}

    MatQ solve() {
        prepare_dual();
        for (int t = 1; t <= ls_; ++t) add_sub_frame(t);
        for (int tp = 1; tp <= l1_; ++tp) add_quot_frame(tp);
        if (s_ >= 3) add_iota_pins();
        if (s_ == 2) add_boundary();

        MatQ A(static_cast<int>(sys_.rows.size()), N_);
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < N_; ++j) A.at(i, j) = sys_.rows[i][j];
        std::vector<Q> theta;
        switch (linear_solve(A, sys_.rhs, theta)) {
            case LinStatus::unique:
                break;
            case LinStatus::inconsistent:
                throw DataInconsistent("frame equations are contradictory");
            case LinStatus::underdetermined:
                throw DataInconsistent("frame equations leave the cross "
                                       "block undetermined");
        }
        MatQ out = L0_;
        for (int i = 0; i < l1_; ++i)
            for (int j = 0; j < ls_; ++j)
                out.at(i, k_ + j) = theta[i * ls_ + j];
        return out;
    }

private:
    // Entry (i, j) of the candidate matrix as an affine scalar.
    Aff primal(int i, int j) const {
        Aff a(G_);
        if (i < l1_ && j >= k_)
            a.g[i * ls_ + (j - k_)] = Q(1);
        else
            a.c = L0_.at(i, j);
        return a;
    }

    // Entry (i, j) of the dual candidate conj_w0(L^{-T}).  Only the
    // leading ls_ rows of the trailing l1_ columns move with X, affinely
    // through Y = A^{-1} (corr - X) B^{-1} flipped into place.
    Aff dual_entry(int i, int j) const {
        Aff a(G_);
        a.c = DL0_.at(i, j);
        if (i < ls_ && j >= n_ - l1_) {
            int jj = j - (n_ - l1_);
            for (int x = 0; x < l1_; ++x)
                for (int y = 0; y < ls_; ++y)
                    a.g[x * ls_ + y] =
                        -Ainv_.at(l1_ - 1 - jj, x) * Binv_.at(y, ls_ - 1 - i);
        }
        return a;
    }

    void prepare_dual() {
        DL0_ = inverse(L0_).transpose().conj_w0();
        Ainv_ = inverse(L0_.submatrix(0, 0, l1_, l1_));
        Binv_ = inverse(L0_.submatrix(k_, k_, ls_, ls_));
    }

    const MatQ& cst_at(int t, bool quotient) const {
        auto it = wb_.cst.find(CstKey{1, s_, t, quotient});
        if (it == wb_.cst.end())
            throw DataInconsistent("missing window frame");
        return it->second;
    }

    // v = sum_c gamma_c W[:, c] kills the known rows; its leading entries
    // must be proportional to the frame's last column.
    void add_sub_frame(int t) {
        const MatQ& F = cst_at(t, false);
        if (F.rows() != l1_ || F.cols() != l1_)
            throw DataInconsistent("sub-side frame has the wrong size");
        MatQ known(k_ - l1_, k_ - l1_ + 1);
        for (int i = l1_; i < k_; ++i)
            for (int c = l1_ - 1; c < k_; ++c)
                known.at(i - l1_, c - (l1_ - 1)) = L0_.at(i, t + c);
        auto gamma = kill_vector(known);
        for (int i = 0; i < l1_; ++i) {
            std::vector<Q> row(N_, Q(0));
            Q rhs(0);
            for (int c = l1_ - 1; c < k_; ++c) {
                Aff a = primal(i, t + c);
                const Q& g = gamma[c - (l1_ - 1)];
                rhs -= a.c * g;
                for (int m = 0; m < G_; ++m) row[m] += a.g[m] * g;
            }
            row[G_ + (t - 1)] = -F.at(i, l1_ - 1);
            sys_.add(row, rhs);
        }
    }

    // Same relation on the dual window; the quotient-side frame with
    // shift tp is the dual's sub-side frame with shift l1 - tp + 1.
    void add_quot_frame(int tp) {
        const MatQ& F = cst_at(tp, true);
        if (F.rows() != ls_ || F.cols() != ls_)
            throw DataInconsistent("quotient-side frame has the wrong size");
        int th = l1_ - tp + 1;
        int kd = n_ - l1_;
        MatQ known(kd - ls_, kd - ls_ + 1);
        for (int i = ls_; i < kd; ++i)
            for (int c = ls_ - 1; c < kd; ++c)
                known.at(i - ls_, c - (ls_ - 1)) = DL0_.at(i, th + c);
        auto gamma = kill_vector(known);
        for (int i = 0; i < ls_; ++i) {
            std::vector<Q> row(N_, Q(0));
            Q rhs(0);
            for (int c = ls_ - 1; c < kd; ++c) {
                Aff a = dual_entry(i, th + c);
                const Q& g = gamma[c - (ls_ - 1)];
                rhs -= a.c * g;
                for (int m = 0; m < G_; ++m) row[m] += a.g[m] * g;
            }
            row[G_ + ls_ + (tp - 1)] = -F.at(i, ls_ - 1);
            sys_.add(row, rhs);
        }
    }

    // Columns l1+1..lead of the (1,s) induced parameter: their kill
    // vectors live on known rows and their normalizing entries are known
    // scalars, so each column contributes l1 plain affine equations.
    void add_iota_pins() {
        auto it = wb_.iota.find({1, s_});
        if (it == wb_.iota.end())
            throw DataInconsistent("missing injection datum");
        const MatQ& induced = it->second.induced;
        int lead = std::min(l1_ + sh_.lengths()[1], k_);
        if (induced.rows() != lead)
            throw DataInconsistent("injection datum has the wrong size");
        for (int jp = l1_; jp < lead; ++jp) {
            MatQ known(k_ - 1 - jp, k_ - jp);
            for (int i = jp + 1; i < k_; ++i)
                for (int c = jp; c < k_; ++c)
                    known.at(i - jp - 1, c - jp) = L0_.at(i, ls_ + c);
            auto gamma = kill_vector(known);
            Q norm(0);
            for (int c = jp; c < k_; ++c)
                norm += gamma[c - jp] * L0_.at(jp, ls_ + c);
            if (norm == Q(0))
                throw DataInconsistent("injection datum is degenerate");
            for (int i = 0; i < l1_; ++i) {
                std::vector<Q> row(N_, Q(0));
                Q rhs = induced.at(i, jp) * norm;
                for (int c = jp; c < k_; ++c) {
                    Aff a = primal(i, ls_ + c);
                    const Q& g = gamma[c - jp];
                    rhs -= a.c * g;
                    for (int m = 0; m < G_; ++m) row[m] += a.g[m] * g;
                }
                sys_.add(row, rhs);
            }
        }
    }

    // s = 2 only: the block boundary entry is 1 on the normalized class.
    void add_boundary() {
        std::vector<Q> row(N_, Q(0));
        row[(l1_ - 1) * ls_] = Q(1);
        sys_.add(row, Q(1));
    }

    const ForwardBundle& wb_;
    const SemistableShape& sh_;
    MatQ L0_, DL0_, Ainv_, Binv_;
    int n_, s_, l1_, ls_, k_, G_, N_;
    System sys_;
};

MatQ window_matrix(const ExtendedBundle& bundles, const SemistableShape& shape,
                   int r, int q) {
    auto it = bundles.windows.find({r, q});
    if (it == bundles.windows.end())
        throw DataInconsistent("missing window bundle");
    const ForwardBundle& wb = it->second;
    SemistableShape wsh = shape.window(r, q);
    const int np = wsh.n(), sp = wsh.s();

    if (sp == 1) {
        if (wb.levi.size() != 1 || wb.levi[0].blocks.size() != 1 ||
            wb.levi[0].blocks[0].rows() != np)
            throw DataInconsistent("malformed single-block bundle");
        return wb.levi[0].blocks[0];
    }
    if (wsh.is_crystalline()) {
        if (wb.cryst.C.rows() != np)
            throw DataInconsistent("malformed crystalline class");
        return wb.cryst.C;
    }

    MatQ L0 = MatQ::identity(np);
    if (sp == 2) {
        L0.set_block(0, 0, window_matrix(bundles, shape, r, r));
        int l1 = wsh.lengths().front();
        L0.set_block(l1, l1, window_matrix(bundles, shape, q, q));
    } else {
        MatQ left = window_matrix(bundles, shape, r, q - 1);
        MatQ right = window_matrix(bundles, shape, r + 1, q);
        int l1 = wsh.lengths().front();
        int ov = np - l1 - wsh.lengths().back();
        if (left.submatrix(l1, l1, ov, ov) != right.submatrix(0, 0, ov, ov))
            throw DataInconsistent("window reconstructions disagree");
        L0.set_block(0, 0, left);
        L0.set_block(l1, l1, right);
    }
    return BlockSolver(wb, wsh, std::move(L0)).solve();
}

}  // namespace

HodgeParameter reconstruct(const ExtendedBundle& bundles,
                           const SemistableShape& shape) {
    const int s = shape.s();
    if (s >= 3 && shape.lengths().front() == 1 && shape.lengths().back() == 1 &&
        !shape.is_crystalline())
        throw UnsupportedShape(
            "no pin-down branch: both end blocks have length 1 and the "
            "shape is not crystalline");

    // Work in the class normal form: frames and classes are already
    // invariant, iota scaling is pinned here, and the result is the
    // normalized representative.
    ExtendedBundle nb;
    try {
        nb = class_normal_form(bundles, shape);
    } catch (const Error&) {
        throw DataInconsistent("bundle cannot be torus-normalized");
    }

    HodgeParameter P(shape, window_matrix(nb, shape, 1, s));
    try {
        if (class_normal_form(forward_extended(P), shape) != nb)
            throw DataInconsistent("re-verification mismatch");
    } catch (const DataInconsistent&) {
        throw;
    } catch (const Error&) {
        throw DataInconsistent("re-verification failed");
    }
    return P;
}

namespace {

// Corner entry of the crystalline window [r,q] by two-point interpolation
// of the induced datum, which is affine-linear in that entry.
MatQ crystalline_window(const IotaData& data, const SemistableShape& shape,
                        int r, int q) {
    const int sp = q - r + 1;
    MatQ C = MatQ::identity(sp);
    if (sp == 1) return C;
    if (sp == 2) {
        C.at(0, 1) = Q(1);
        return C;
    }
    MatQ left = crystalline_window(data, shape, r, q - 1);
    MatQ right = crystalline_window(data, shape, r + 1, q);
    if (left.submatrix(1, 1, sp - 2, sp - 2) !=
        right.submatrix(0, 0, sp - 2, sp - 2))
        throw DataInconsistent("window reconstructions disagree");
    C.set_block(0, 0, left);
    C.set_block(1, 1, right);
    C.at(0, sp - 1) = Q(0);

    auto it = data.find({r, q});
    if (it == data.end()) throw DataInconsistent("missing injection datum");
    const MatQ& ind = it->second.induced;
    if (ind.rows() < 2 || ind.cols() < 2)
        throw DataInconsistent("injection datum has the wrong size");
    Q target = ind.at(0, 1);

    SemistableShape wsh = shape.window(r, q);
    auto eval = [&](const Q& x) {
        MatQ M = C;
        M.at(0, sp - 1) = x;
        return iota_pair(HodgeParameter(wsh, M), 1, sp).induced.at(0, 1);
    };
    std::vector<std::pair<Q, Q>> samples;
    for (long trial : {0, 1, -1, 2, -2, 3, -3, 4}) {
        if (samples.size() == 2) break;
        try {
            samples.emplace_back(Q(trial), eval(Q(trial)));
        } catch (const Error&) {
        }
    }
    if (samples.size() < 2)
        throw DataInconsistent("injection datum evaluation failed");
    Q slope = (samples[1].second - samples[0].second) /
              (samples[1].first - samples[0].first);
    if (slope == Q(0))
        throw DataInconsistent("degenerate interpolation");
    C.at(0, sp - 1) =
        samples[0].first + (target - samples[0].second) / slope;
    try {
        if (eval(C.at(0, sp - 1)) != target)
            throw DataInconsistent("interpolation re-check failed");
    } catch (const DataInconsistent&) {
        throw;
    } catch (const Error&) {
        throw DataInconsistent("interpolation re-check failed");
    }
    return C;
}

}  // namespace

CrystClass reconstruct_crystalline(const IotaData& data,
                                   const SemistableShape& shape) {
    if (!shape.is_crystalline())
        throw InvalidShape("crystalline shape required");

    // Pin the torus scaling of every datum to the normalized class.
    IotaData nd;
    for (const auto& [key, pair] : data) {
        if (pair.two_block.rows() != 2)
            throw DataInconsistent("malformed two-block datum");
        const Q c = pair.two_block.at(0, 1);
        if (c == Q(0))
            throw DataInconsistent("datum cannot be torus-normalized");
        IotaPair p = pair;
        p.two_block.at(0, 1) = Q(1);
        if (p.induced.cols() >= 2) p.induced.at(0, 1) /= c;
        nd[key] = std::move(p);
    }

    MatQ C = crystalline_window(nd, shape, 1, shape.s());
    HodgeParameter P(shape, C);
    try {
        for (const auto& [key, pair] : nd)
            if (iota_pair(P, key.first, key.second) != pair)
                throw DataInconsistent("re-verification mismatch");
    } catch (const DataInconsistent&) {
        throw;
    } catch (const Error&) {
        throw DataInconsistent("re-verification failed");
    }
    return CrystClass{C};
}

}  // namespace hodge
