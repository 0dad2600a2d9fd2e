#include "weylkit/weyl_core.hpp"

#include <cmath>
#include <numbers>

namespace weylkit {

namespace {

// Digit helpers for the Hilbert index t in {0..N-1}^d.
std::vector<int> h_decode(long it, int N, int d) {
    std::vector<int> t(static_cast<std::size_t>(d));
    for (int a = d - 1; a >= 0; --a) {
        t[static_cast<std::size_t>(a)] = static_cast<int>(it % N);
        it /= N;
    }
    return t;
}

long h_shift(long it, const std::vector<int>& x, int N, int d) {
    // index of (t - x) mod N, componentwise
    long out = 0;
    auto t = h_decode(it, N, d);
    for (int a = 0; a < d; ++a) {
        out = out * N + ((t[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(a)]) % N + N) % N;
    }
    return out;
}

long dot_mod(const std::vector<int>& a, const std::vector<int>& b, int N) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return ((s % N) + N) % N;
}

}  // namespace

void WeylSystem::check_state(const StateVector& f, const char* what) const {
    if (f.space != space_) {
        throw std::invalid_argument(std::string(what) + ": state from a different phase space");
    }
}

void WeylSystem::check_symbol(const SymbolGrid& a, Side side, const char* what) const {
    if (a.space != space_) {
        throw std::invalid_argument(std::string(what) + ": symbol from a different phase space");
    }
    if (a.side != side) {
        throw std::invalid_argument(std::string(what) + ": symbol lives on the wrong Fourier side");
    }
}

StateVector WeylSystem::heisenberg_apply(const PhasePoint& X, const StateVector& f) const {
    return heisenberg_apply(space_.encode(X), f);
}

StateVector WeylSystem::heisenberg_apply(long ix, const StateVector& f) const {
    check_state(f, "heisenberg_apply");
    const int N = space_.modulus();
    const int d = space_.dof();
    const PhasePoint X = space_.decode(ix);
    const long dim = space_.hilbert_dim();

    // global phase exp(-2 pi i h xi.x / N)
    long xix = dot_mod(X.xi, X.x, N);
    const cd global = std::conj(unit_phase(N, static_cast<long>(half_inverse_) * xix));

    StateVector out(space_);
    for (long it = 0; it < dim; ++it) {
        auto t = h_decode(it, N, d);
        const cd mod = unit_phase(N, dot_mod(X.xi, t, N));
        out.values(it) = global * mod * f.values(h_shift(it, X.x, N, d));
    }
    return out;
}

CMat WeylSystem::pi_matrix(long ix) const {
    const long dim = space_.hilbert_dim();
    CMat M = CMat::Zero(dim, dim);
    const int N = space_.modulus();
    const int d = space_.dof();
    const PhasePoint X = space_.decode(ix);
    long xix = dot_mod(X.xi, X.x, N);
    const cd global = std::conj(unit_phase(N, static_cast<long>(half_inverse_) * xix));
    for (long it = 0; it < dim; ++it) {
        auto t = h_decode(it, N, d);
        M(it, h_shift(it, X.x, N, d)) = global * unit_phase(N, dot_mod(X.xi, t, N));
    }
    return M;
}

cd WeylSystem::cocycle(long ix, long iy) const {
    const CMat P = pi_matrix(ix) * pi_matrix(iy);
    const CMat S = pi_matrix(space_.add(ix, iy));
    const double nsq = static_cast<double>(space_.hilbert_dim());
    const cd c = (S.adjoint() * P).trace() / nsq;
    if ((P - c * S).norm() > 1e-10 * P.norm()) {
        throw std::runtime_error("cocycle: pi(X) pi(Y) not proportional to pi(X+Y)");
    }
    return c;
}

cd WeylSystem::cocycle_phase(long ix, long iy) const {
    const int s = symplectic_form(space_, ix, iy);
    return unit_phase(space_.modulus(), static_cast<long>(half_inverse_) * s);
}

AmbiguityTable WeylSystem::ambiguity(const StateVector& f, const StateVector& phi) const {
    check_state(f, "ambiguity");
    check_state(phi, "ambiguity");
    AmbiguityTable A(space_, Side::OnXi);
    for (long ix = 0; ix < space_.point_count(); ++ix) {
        const StateVector g = heisenberg_apply(ix, phi);
        A.values(ix) = g.values.dot(f.values);  // <f, pi(X) phi>
    }
    return A;
}

SymbolGrid WeylSystem::wigner(const StateVector& f, const StateVector& phi) const {
    return sym_fourier(ambiguity(f, phi));
}

CMat WeylSystem::quantize(const SymbolGrid& a) const {
    check_symbol(a, Side::OnXiStar, "quantize");
    const SymbolGrid ac = inv_sym_fourier(a);
    const int N = space_.modulus();
    const int d = space_.dof();
    const long dim = space_.hilbert_dim();
    const double w = space_.weight();

    // Op[t, s] = N^-d sum_xi a˅(t-s, xi) exp(2 pi i (xi.t - h xi.(t-s)) / N)
    CMat T(dim, dim);
    const long nxi = dim;  // N^d frequency digits
    PhasePoint X;
    X.x.resize(d);
    X.xi.resize(d);
    for (long it = 0; it < dim; ++it) {
        auto t = h_decode(it, N, d);
        for (long is = 0; is < dim; ++is) {
            auto s = h_decode(is, N, d);
            for (int a2 = 0; a2 < d; ++a2) X.x[a2] = ((t[a2] - s[a2]) % N + N) % N;
            cd acc{0.0, 0.0};
            for (long ik = 0; ik < nxi; ++ik) {
                X.xi = h_decode(ik, N, d);
                const long ph =
                    dot_mod(X.xi, t, N) - static_cast<long>(half_inverse_) * dot_mod(X.xi, X.x, N);
                acc += ac.values(space_.encode(X)) * unit_phase(N, ph);
            }
            T(it, is) = w * acc;
        }
    }
    return T;
}

SymbolGrid WeylSystem::dequantize(const CMat& T) const {
    const long dim = space_.hilbert_dim();
    if (T.rows() != dim || T.cols() != dim) {
        throw std::invalid_argument("dequantize: operator must be N^d x N^d");
    }
    const int N = space_.modulus();
    const int d = space_.dof();
    SymbolGrid ac(space_, Side::OnXi);
    for (long ix = 0; ix < space_.point_count(); ++ix) {
        const PhasePoint X = space_.decode(ix);
        long xix = dot_mod(X.xi, X.x, N);
        const cd global = std::conj(unit_phase(N, static_cast<long>(half_inverse_) * xix));
        cd acc{0.0, 0.0};
        for (long it = 0; it < dim; ++it) {
            auto t = h_decode(it, N, d);
            const cd entry = global * unit_phase(N, dot_mod(X.xi, t, N));
            acc += std::conj(entry) * T(it, h_shift(it, X.x, N, d));
        }
        ac.values(ix) = acc;
    }
    return sym_fourier(ac);
}

SymbolGrid WeylSystem::moyal(const SymbolGrid& a, const SymbolGrid& b) const {
    return dequantize(quantize(a) * quantize(b));
}

SymbolGrid WeylSystem::moyal_twisted(const SymbolGrid& a, const SymbolGrid& b) const {
    check_symbol(a, Side::OnXiStar, "moyal_twisted");
    check_symbol(b, Side::OnXiStar, "moyal_twisted");
    const SymbolGrid ac = inv_sym_fourier(a);
    const SymbolGrid bc = inv_sym_fourier(b);
    const long n = space_.point_count();
    SymbolGrid pc(space_, Side::OnXi);
    for (long iz = 0; iz < n; ++iz) {
        cd acc{0.0, 0.0};
        for (long ix = 0; ix < n; ++ix) {
            const long izx = space_.sub(iz, ix);
            acc += ac.values(ix) * bc.values(izx) * cocycle_phase(ix, izx);
        }
        pc.values(iz) = space_.weight() * acc;
    }
    return sym_fourier(pc);
}

SymbolGrid WeylSystem::plane_wave(long ix0) const {
    SymbolGrid pw(space_, Side::OnXiStar);
    for (long ip = 0; ip < space_.point_count(); ++ip) {
        pw.values(ip) = unit_phase(space_.modulus(), symplectic_form(space_, ip, ix0));
    }
    return pw;
}

SymbolGrid WeylSystem::pi_sharp_apply(long ix1, long ix2, const SymbolGrid& F) const {
    check_symbol(F, Side::OnXiStar, "pi_sharp_apply");
    const SymbolGrid fc = inv_sym_fourier(F);
    const long iy = space_.add(ix1, ix2);
    const long inx1 = space_.neg(ix1);
    SymbolGrid hc(space_, Side::OnXi);
    for (long iz = 0; iz < space_.point_count(); ++iz) {
        const long izm = space_.sub(iz, ix2);
        hc.values(iz) =
            fc.values(izm) * cocycle_phase(iy, izm) * cocycle_phase(space_.add(iz, ix1), inx1);
    }
    return sym_fourier(hc);
}

SymbolGrid WeylSystem::pi_sharp_apply_operator(long ix1, long ix2, const SymbolGrid& F) const {
    const CMat T = quantize(F);
    const CMat U = pi_matrix(space_.add(ix1, ix2));
    const CMat V = pi_matrix(ix1);
    return dequantize(U * T * V.adjoint());
}

CMat WeylSystem::window_bank(const StateVector& phi) const {
    check_state(phi, "window_bank");
    const long n = space_.point_count();
    CMat bank(space_.hilbert_dim(), n);
    for (long ix = 0; ix < n; ++ix) {
        bank.col(ix) = heisenberg_apply(ix, phi).values;
    }
    return bank;
}

CMat WeylSystem::matrix_coeff_table(const SymbolGrid& a, const Window& w) const {
    const CMat bank = window_bank(w.phi);
    const CMat op = quantize(a);
    // (bank^H op bank)(iy, ix) = <Op(a) phi_X, phi_Y>; transpose to (ix, iy).
    return (bank.adjoint() * (op * bank)).transpose();
}

AmbiguityTable WeylSystem::analysis_apply(const StateVector& f, const Window& w) const {
    return ambiguity(f, w.phi);
}

StateVector WeylSystem::synthesis_apply(const SymbolGrid& G, const Window& w) const {
    if (G.space != space_) {
        throw std::invalid_argument("synthesis_apply: table from a different phase space");
    }
    StateVector out(space_);
    for (long ix = 0; ix < space_.point_count(); ++ix) {
        out.values += G.values(ix) * heisenberg_apply(ix, w.phi).values;
    }
    out.values *= space_.weight();
    return out;
}

SymbolGrid WeylSystem::channel_apply(const CMat& Ca, const SymbolGrid& G) const {
    const long n = space_.point_count();
    if (Ca.rows() != n || Ca.cols() != n || G.values.size() != n) {
        throw std::invalid_argument("channel_apply: table sizes do not match the lattice");
    }
    SymbolGrid out(G.space, G.side);
    // (T_a G)(Y) = sum_X N^-d C_a(X, Y) G(X)
    out.values = space_.weight() * (Ca.transpose() * G.values);
    return out;
}

CMat WeylSystem::channel_matrix(const CMat& Ca) const {
    return space_.weight() * Ca.transpose();
}

Window default_window(const FinitePhaseSpace& space) {
    const int N = space.modulus();
    const int d = space.dof();
    Eigen::VectorXd axis(N);
    for (int t = 0; t < N; ++t) {
        double v = 0.0;
        for (int k = -3; k <= 3; ++k) {
            const double u = static_cast<double>(t) + static_cast<double>(k) * N;
            v += std::exp(-std::numbers::pi * u * u / N);
        }
        axis(t) = v;
    }
    StateVector phi(space);
    const long dim = space.hilbert_dim();
    for (long it = 0; it < dim; ++it) {
        long rem = it;
        double v = 1.0;
        for (int a = 0; a < d; ++a) {
            long denom = 1;
            for (int b = a + 1; b < d; ++b) denom *= N;
            v *= axis(static_cast<int>((rem / denom) % N));
            rem %= denom;
        }
        phi.values(it) = v;
    }
    phi.values /= phi.values.norm();
    return Window(std::move(phi), WindowKind::DiscreteGaussian);
}

}  // namespace weylkit
