// weyl_core.hpp — the finite Weyl-Heisenberg system on H = C^{N^d}:
// projective representation operators, ambiguity function, cross-Wigner
// distribution, quantization/dequantization, Moyal product, the C_a/T_a/V
// analysis machinery, and the pi^# action on symbols.
//
// Phase convention:
//   (pi(x,xi) f)(t) = exp(-2 pi i h xi.x / N) exp(2 pi i xi.t / N) f(t - x)
// with h = (N+1)/2 = 2^{-1} mod N.  This gives pi(X)* = pi(-X) and
// trace(pi(X)) = N^d [X = 0], which are the two properties everything else
// rests on.  The family {pi(X)} is projective: pi(X) pi(Y) = c(X,Y) pi(X+Y)
// with c(X,Y) = exp(2 pi i h sigma(X,Y) / N).  All identities used from the
// calculus involve only pi at single lattice points, so central phases cancel
// in every tested identity.

#pragma once

#include "weylkit/phase_space.hpp"

namespace weylkit {

// Element of H = C^{N^d}, plain little-l2 inner product.
struct StateVector {
    FinitePhaseSpace space;
    CVec values;  // N^d entries, row-major digit order

    StateVector(const FinitePhaseSpace& sp) : space(sp), values(CVec::Zero(sp.hilbert_dim())) {}
    StateVector(const FinitePhaseSpace& sp, CVec vals) : space(sp), values(std::move(vals)) {
        if (values.size() != space.hilbert_dim()) {
            throw std::invalid_argument("StateVector: length must equal N^d");
        }
    }
    double norm() const { return values.norm(); }
};

enum class WindowKind { DiscreteGaussian, Custom };

// Unit-norm analysis window.
struct Window {
    StateVector phi;
    WindowKind generator{WindowKind::Custom};

    Window(StateVector v, WindowKind kind = WindowKind::Custom)
        : phi(std::move(v)), generator(kind) {
        if (std::abs(phi.norm() - 1.0) > 1e-12) {
            throw std::invalid_argument("Window: vector must have unit norm");
        }
    }
};

// Ambiguity tables live on Xi; same storage as a symbol grid.
using AmbiguityTable = SymbolGrid;

class WeylSystem {
public:
    explicit WeylSystem(const FinitePhaseSpace& sp)
        : space_(sp), half_inverse_((sp.modulus() + 1) / 2) {}

    const FinitePhaseSpace& space() const { return space_; }
    int half_inverse() const { return half_inverse_; }  // 2^{-1} mod N

    // pi(X) f, evaluated in O(N^d).
    StateVector heisenberg_apply(const PhasePoint& X, const StateVector& f) const;
    StateVector heisenberg_apply(long ix, const StateVector& f) const;

    // Dense matrix of pi(X).
    CMat pi_matrix(long ix) const;

    // The scalar c with pi(X) pi(Y) = c pi(X+Y), extracted from the matrices
    // and verified: throws std::runtime_error if the products fail to be
    // proportional to 1e-10 (cannot happen for a correct pi).
    cd cocycle(long ix, long iy) const;

    // Closed form of the same scalar, c = exp(2 pi i h sigma(X,Y)/N).
    cd cocycle_phase(long ix, long iy) const;

    // A_phi f (X) = <f, pi(X) phi>.
    AmbiguityTable ambiguity(const StateVector& f, const StateVector& phi) const;

    // W(f, phi) = hat of the ambiguity function; quantizes to <.,phi> f.
    SymbolGrid wigner(const StateVector& f, const StateVector& phi) const;

    // Op(a) = sum_X N^-d a˅(X) pi(X); unitary from weighted l2(Xi*) onto
    // Hilbert-Schmidt space.
    CMat quantize(const SymbolGrid& a) const;

    // Inverse of quantize: a˅(X) = trace(pi(X)* T), then a = hat(a˅).
    SymbolGrid dequantize(const CMat& T) const;

    // Moyal product via operator composition: Op(a # b) = Op(a) Op(b).
    SymbolGrid moyal(const SymbolGrid& a, const SymbolGrid& b) const;

    // Independent route: twisted convolution of the check transforms,
    //   (a # b)˅(Z) = sum_X N^-d a˅(X) b˅(Z - X) c(X, Z - X).
    SymbolGrid moyal_twisted(const SymbolGrid& a, const SymbolGrid& b) const;

    // Plane-wave symbol P |-> exp(2 pi i sigma(P, X0)/N); quantizes to pi(X0).
    SymbolGrid plane_wave(long ix0) const;

    // pi^#(X1, X2) F = pw(X1+X2) # F # pw(-X1), evaluated in closed form on
    // the check side (O(N^{2d})).
    SymbolGrid pi_sharp_apply(long ix1, long ix2, const SymbolGrid& F) const;

    // Same action through the operator picture:
    // quantize^{-1}( pi(X1+X2) quantize(F) pi(X1)^{-1} ).  Test route.
    SymbolGrid pi_sharp_apply_operator(long ix1, long ix2, const SymbolGrid& F) const;

    // Bank of coherent states: column ix holds phi_X = pi(X) phi.
    CMat window_bank(const StateVector& phi) const;

    // C_a(X, Y) = <Op(a) phi_X, phi_Y>, returned with entry (ix, iy).
    CMat matrix_coeff_table(const SymbolGrid& a, const Window& w) const;

    // V f = A_phi f  (analysis) and V* G = sum_X N^-d G(X) phi_X (synthesis).
    AmbiguityTable analysis_apply(const StateVector& f, const Window& w) const;
    StateVector synthesis_apply(const SymbolGrid& G, const Window& w) const;

    // (T_a G)(Y) = sum_X N^-d C_a(X, Y) G(X).  The kernel orientation is the
    // one forced by Op(a) = V* T_a V.
    SymbolGrid channel_apply(const CMat& Ca, const SymbolGrid& G) const;

    // Dense matrix of T_a acting on plain coefficient tables (the weight is
    // folded into the matrix).
    CMat channel_matrix(const CMat& Ca) const;

private:
    FinitePhaseSpace space_;
    int half_inverse_;

    void check_state(const StateVector& f, const char* what) const;
    void check_symbol(const SymbolGrid& a, Side side, const char* what) const;
};

// Periodized discrete Gaussian window, phi(t) ~ sum_{|k|<=3} exp(-pi (t+kN)^2 / N)
// per axis, normalized.
Window default_window(const FinitePhaseSpace& space);

}  // namespace weylkit
