#include "weylkit/phase_space.hpp"

#include <cmath>
#include <numbers>

namespace weylkit {

namespace {

void check_same_space(const FinitePhaseSpace& a, const FinitePhaseSpace& b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": phase-space dimensions do not match");
    }
}

// Twiddle table: w[k] = exp(2 pi i k / N), k = 0..N-1.
std::vector<cd> twiddles(int N) {
    std::vector<cd> w(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        w[static_cast<std::size_t>(k)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / N);
    }
    return w;
}

// Apply the N x N kernel M along one axis of the flat tensor (2d axes, base N).
void apply_axis(CVec& t, const CMat& M, int axis, int naxes, int N) {
    long stride = 1;
    for (int a = naxes - 1; a > axis; --a) stride *= N;
    const long block = stride * N;
    const long total = t.size();
    CVec fiber(N), out(N);
    for (long base = 0; base < total; base += block) {
        for (long off = 0; off < stride; ++off) {
            for (int k = 0; k < N; ++k) fiber(k) = t(base + off + k * stride);
            out.noalias() = M * fiber;
            for (int k = 0; k < N; ++k) t(base + off + k * stride) = out(k);
        }
    }
}

// Swap the position digit block with the frequency digit block of the flat
// tensor: out(x, xi) = in(xi, x).
CVec block_swap(const CVec& t, int d, int N) {
    long half = 1;
    for (int a = 0; a < d; ++a) half *= N;
    CVec out(t.size());
    for (long i = 0; i < half; ++i) {
        for (long j = 0; j < half; ++j) {
            out(i * half + j) = t(j * half + i);
        }
    }
    return out;
}

// Separable evaluation of the symplectic kernel exp(2 pi i (q.x - xi.p)/N):
// position axes contract against exp(+2 pi i j k/N), frequency axes against
// exp(-2 pi i j k/N), and the two digit blocks swap roles in the output.
// The hat and check maps share this matrix (the transform is an involution);
// only the side tag differs.
SymbolGrid separable_transform(const SymbolGrid& g, bool forward) {
    const auto& sp = g.space;
    const int N = sp.modulus();
    const int d = sp.dof();
    const auto w = twiddles(N);
    CMat plus(N, N), minus(N, N);
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
            plus(j, k) = w[static_cast<std::size_t>((j * k) % N)];
            minus(j, k) = std::conj(plus(j, k));
        }
    }

    CVec t = g.values;
    for (int a = 0; a < d; ++a) apply_axis(t, plus, a, 2 * d, N);
    for (int a = d; a < 2 * d; ++a) apply_axis(t, minus, a, 2 * d, N);
    t = block_swap(t, d, N);
    t *= sp.weight();
    return SymbolGrid(sp, forward ? Side::OnXiStar : Side::OnXi, std::move(t));
}

}  // namespace

int symplectic_form(const FinitePhaseSpace& space, const PhasePoint& p, const PhasePoint& x) {
    space.check_point(p);
    space.check_point(x);
    const int N = space.modulus();
    long s = 0;
    for (int a = 0; a < space.dof(); ++a) {
        s += static_cast<long>(p.xi[a]) * x.x[a] - static_cast<long>(x.xi[a]) * p.x[a];
    }
    return static_cast<int>(((s % N) + N) % N);
}

int symplectic_form(const FinitePhaseSpace& space, long ip, long ix) {
    return symplectic_form(space, space.decode(ip), space.decode(ix));
}

double weighted_norm(const SymbolGrid& g) {
    return std::sqrt(g.space.weight()) * g.values.norm();
}

cd weighted_inner(const SymbolGrid& a, const SymbolGrid& b) {
    check_same_space(a.space, b.space, "weighted_inner");
    if (a.side != b.side) {
        throw std::invalid_argument("weighted_inner: grids live on different Fourier sides");
    }
    // linear in the first argument, conjugate in the second
    return a.space.weight() * b.values.dot(a.values);
}

cd unit_phase(int modulus, long k) {
    long r = ((k % modulus) + modulus) % modulus;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / modulus);
}

SymbolGrid sym_fourier(const SymbolGrid& b) {
    if (b.side != Side::OnXi) {
        throw std::invalid_argument("sym_fourier: input must live on Xi");
    }
    return separable_transform(b, true);
}

SymbolGrid inv_sym_fourier(const SymbolGrid& a) {
    if (a.side != Side::OnXiStar) {
        throw std::invalid_argument("inv_sym_fourier: input must live on Xi*");
    }
    return separable_transform(a, false);
}

SymbolGrid sym_fourier_direct(const SymbolGrid& b) {
    if (b.side != Side::OnXi) {
        throw std::invalid_argument("sym_fourier_direct: input must live on Xi");
    }
    const auto& sp = b.space;
    const long n = sp.point_count();
    SymbolGrid out(sp, Side::OnXiStar);
    for (long ip = 0; ip < n; ++ip) {
        cd acc{0.0, 0.0};
        for (long ix = 0; ix < n; ++ix) {
            acc += unit_phase(sp.modulus(), symplectic_form(sp, ip, ix)) * b.values(ix);
        }
        out.values(ip) = sp.weight() * acc;
    }
    return out;
}

SymbolGrid inv_sym_fourier_direct(const SymbolGrid& a) {
    if (a.side != Side::OnXiStar) {
        throw std::invalid_argument("inv_sym_fourier_direct: input must live on Xi*");
    }
    const auto& sp = a.space;
    const long n = sp.point_count();
    SymbolGrid out(sp, Side::OnXi);
    for (long ix = 0; ix < n; ++ix) {
        cd acc{0.0, 0.0};
        for (long ip = 0; ip < n; ++ip) {
            acc += std::conj(unit_phase(sp.modulus(), symplectic_form(sp, ip, ix))) * a.values(ip);
        }
        out.values(ix) = sp.weight() * acc;
    }
    return out;
}

}  // namespace weylkit
