// oracles.hpp — independent reference implementations used only by tests.
// Everything here evaluates defining formulas by brute force so that the
// library paths have something slow and dumb to be checked against.

#pragma once

#include <complex>
#include <random>

#include "weylkit/phase_space.hpp"
#include "weylkit/weyl_core.hpp"

namespace oracles {

using weylkit::cd;
using weylkit::CMat;
using weylkit::CVec;

// Literal double-sum symplectic Fourier transform, kernel written out from
// scratch (no shared code with the library transform paths).
inline weylkit::SymbolGrid brute_hat(const weylkit::SymbolGrid& b) {
    const auto& sp = b.space;
    const int N = sp.modulus();
    weylkit::SymbolGrid out(sp, weylkit::Side::OnXiStar);
    const double tau = 2.0 * 3.14159265358979323846;
    for (long ip = 0; ip < sp.point_count(); ++ip) {
        const auto P = sp.decode(ip);
        cd acc{0.0, 0.0};
        for (long ix = 0; ix < sp.point_count(); ++ix) {
            const auto X = sp.decode(ix);
            long s = 0;
            for (int a = 0; a < sp.dof(); ++a) {
                s += static_cast<long>(P.xi[a]) * X.x[a] - static_cast<long>(X.xi[a]) * P.x[a];
            }
            const double ang = tau * static_cast<double>(((s % N) + N) % N) / N;
            acc += cd(std::cos(ang), std::sin(ang)) * b.values(ix);
        }
        out.values(ip) = acc * sp.weight();
    }
    return out;
}

inline weylkit::SymbolGrid brute_check(const weylkit::SymbolGrid& a) {
    const auto& sp = a.space;
    const int N = sp.modulus();
    weylkit::SymbolGrid out(sp, weylkit::Side::OnXi);
    const double tau = 2.0 * 3.14159265358979323846;
    for (long ix = 0; ix < sp.point_count(); ++ix) {
        const auto X = sp.decode(ix);
        cd acc{0.0, 0.0};
        for (long ip = 0; ip < sp.point_count(); ++ip) {
            const auto P = sp.decode(ip);
            long s = 0;
            for (int a = 0; a < sp.dof(); ++a) {
                s += static_cast<long>(P.xi[a]) * X.x[a] - static_cast<long>(X.xi[a]) * P.x[a];
            }
            const double ang = -tau * static_cast<double>(((s % N) + N) % N) / N;
            acc += cd(std::cos(ang), std::sin(ang)) * a.values(ip);
        }
        out.values(ix) = acc * sp.weight();
    }
    return out;
}

// Quantization by the defining sum Op(a) = sum_X N^-d a˅(X) pi(X) with dense
// pi matrices.
inline CMat brute_quantize(const weylkit::WeylSystem& sys, const weylkit::SymbolGrid& a) {
    const auto& sp = sys.space();
    const weylkit::SymbolGrid ac = brute_check(a);
    CMat T = CMat::Zero(sp.hilbert_dim(), sp.hilbert_dim());
    for (long ix = 0; ix < sp.point_count(); ++ix) {
        T += ac.values(ix) * sys.pi_matrix(ix);
    }
    return sp.weight() * T;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CVec random_cvec(std::mt19937_64& gen, long n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CVec v(n);
    for (long i = 0; i < n; ++i) v(i) = cd(u(gen), u(gen));
    return v;
}

inline weylkit::SymbolGrid random_symbol(std::mt19937_64& gen, const weylkit::FinitePhaseSpace& sp,
                                         weylkit::Side side = weylkit::Side::OnXiStar) {
    return weylkit::SymbolGrid(sp, side, random_cvec(gen, sp.point_count()));
}

inline weylkit::StateVector random_state(std::mt19937_64& gen, const weylkit::FinitePhaseSpace& sp) {
    return weylkit::StateVector(sp, random_cvec(gen, sp.hilbert_dim()));
}

}  // namespace oracles
