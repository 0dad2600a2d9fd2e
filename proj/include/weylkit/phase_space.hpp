// phase_space.hpp — finite phase space Z_N^{2d}, symplectic pairing, and the
// symplectic Fourier transform pair that fixes every normalization in weylkit.
//
// The phase space Xi = Z_N^{2d} (N odd) carries the measure with weight N^{-d}
// per point, so the total mass is N^d and the discrete orthogonality relations
// hold as exact identities rather than asymptotic ones.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace weylkit {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Point of the phase lattice: position and frequency digits, each in Z_N^d.
struct PhasePoint {
    std::vector<int> x;   // position components, reduced to {0,...,N-1}
    std::vector<int> xi;  // frequency components, reduced to {0,...,N-1}
};

// Which side of the symplectic Fourier pair a table of values lives on.
enum class Side { OnXi, OnXiStar };

// Finite model of Xi = Xi* = Z_N^{2d} with per-point weight N^{-d}.
// N must be odd so that 2 is invertible mod N (symmetric Weyl ordering).
class FinitePhaseSpace {
public:
    FinitePhaseSpace(int modulus, int dof) : N_(modulus), d_(dof) {
        if (N_ < 3 || N_ % 2 == 0) {
            throw std::invalid_argument("FinitePhaseSpace: modulus must be odd and >= 3");
        }
        if (d_ < 1) {
            throw std::invalid_argument("FinitePhaseSpace: dof must be >= 1");
        }
        hilbert_dim_ = 1;
        for (int a = 0; a < d_; ++a) hilbert_dim_ *= N_;
        point_count_ = hilbert_dim_ * hilbert_dim_;
        weight_ = 1.0 / static_cast<double>(hilbert_dim_);
    }

    int modulus() const { return N_; }
    int dof() const { return d_; }
    long hilbert_dim() const { return hilbert_dim_; }   // N^d
    long point_count() const { return point_count_; }    // N^{2d}
    double weight() const { return weight_; }            // N^{-d} per point

    bool operator==(const FinitePhaseSpace& o) const { return N_ == o.N_ && d_ == o.d_; }
    bool operator!=(const FinitePhaseSpace& o) const { return !(*this == o); }

    // Flat index layout is row-major over the digit string
    // (x_0, ..., x_{d-1}, xi_0, ..., xi_{d-1}) with the last digit fastest.
    long encode(const PhasePoint& p) const {
        check_point(p);
        long idx = 0;
        for (int a = 0; a < d_; ++a) idx = idx * N_ + p.x[a];
        for (int a = 0; a < d_; ++a) idx = idx * N_ + p.xi[a];
        return idx;
    }

    PhasePoint decode(long idx) const {
        if (idx < 0 || idx >= point_count_) {
            throw std::out_of_range("FinitePhaseSpace::decode: index out of range");
        }
        PhasePoint p;
        p.x.resize(d_);
        p.xi.resize(d_);
        for (int a = 2 * d_ - 1; a >= d_; --a) {
            p.xi[a - d_] = static_cast<int>(idx % N_);
            idx /= N_;
        }
        for (int a = d_ - 1; a >= 0; --a) {
            p.x[a] = static_cast<int>(idx % N_);
            idx /= N_;
        }
        return p;
    }

    // Group law on flat indices (componentwise addition mod N).
    long add(long ia, long ib) const {
        long out = 0;
        long pa = ia, pb = ib;
        // digits come out last-first; rebuild via powers
        long pow = 1;
        for (int a = 0; a < 2 * d_; ++a) {
            int da = static_cast<int>(pa % N_);
            int db = static_cast<int>(pb % N_);
            out += static_cast<long>((da + db) % N_) * pow;
            pa /= N_;
            pb /= N_;
            pow *= N_;
        }
        return out;
    }

    long neg(long ia) const {
        long out = 0;
        long pow = 1;
        for (int a = 0; a < 2 * d_; ++a) {
            int da = static_cast<int>(ia % N_);
            out += static_cast<long>((N_ - da) % N_) * pow;
            ia /= N_;
            pow *= N_;
        }
        return out;
    }

    long sub(long ia, long ib) const { return add(ia, neg(ib)); }

    PhasePoint point(std::vector<int> x, std::vector<int> xi) const {
        PhasePoint p{std::move(x), std::move(xi)};
        reduce(p);
        return p;
    }

    void reduce(PhasePoint& p) const {
        for (auto& c : p.x) c = ((c % N_) + N_) % N_;
        for (auto& c : p.xi) c = ((c % N_) + N_) % N_;
    }

    void check_point(const PhasePoint& p) const {
        if (static_cast<int>(p.x.size()) != d_ || static_cast<int>(p.xi.size()) != d_) {
            throw std::invalid_argument("PhasePoint: component count does not match dof");
        }
        for (int a = 0; a < d_; ++a) {
            if (p.x[a] < 0 || p.x[a] >= N_ || p.xi[a] < 0 || p.xi[a] >= N_) {
                throw std::invalid_argument("PhasePoint: components must be reduced mod N");
            }
        }
    }

private:
    int N_{};
    int d_{};
    long hilbert_dim_{};
    long point_count_{};
    double weight_{};
};

// sigma(P, X) = xi_P . x_X - xi_X . x_P  (mod N), the symplectic duality pairing.
int symplectic_form(const FinitePhaseSpace& space, const PhasePoint& p, const PhasePoint& x);

// Flat-index variant used in inner loops.
int symplectic_form(const FinitePhaseSpace& space, long ip, long ix);

// Complex table over the phase lattice, tagged with the Fourier side it lives on.
struct SymbolGrid {
    FinitePhaseSpace space;
    Side side{Side::OnXiStar};
    CVec values;  // point_count() entries, flat-index order

    SymbolGrid(const FinitePhaseSpace& sp, Side sd)
        : space(sp), side(sd), values(CVec::Zero(sp.point_count())) {}
    SymbolGrid(const FinitePhaseSpace& sp, Side sd, CVec vals)
        : space(sp), side(sd), values(std::move(vals)) {
        if (values.size() != space.point_count()) {
            throw std::invalid_argument("SymbolGrid: value count must equal N^{2d}");
        }
    }

    cd at(const PhasePoint& p) const { return values(space.encode(p)); }
    cd& at(const PhasePoint& p) { return values(space.encode(p)); }
};

// Weighted little-l2 norm and inner product on the phase lattice
// (weight N^{-d} per point; inner product linear in the first argument).
double weighted_norm(const SymbolGrid& g);
cd weighted_inner(const SymbolGrid& a, const SymbolGrid& b);

// Symplectic Fourier transform pair.  Conventions are pinned by requiring that
// the plane wave P |-> exp(2 pi i sigma(P, X0)/N) quantizes to the Weyl
// operator at X0 (see weyl_core):
//
//   hat:    b^(P) = N^-d sum_X exp(+2 pi i sigma(P,X)/N) b(X)
//   check:  a˅(X) = N^-d sum_P exp(-2 pi i sigma(P,X)/N) a(P)
//
// Both maps are involutions composing to the identity; both are isometries of
// the weighted 2-norm.  The default implementations factor the kernel per axis
// (O(d N^{2d+1})); the *_direct variants evaluate the defining double sums
// (O(N^{4d})) and serve as the oracle path.
SymbolGrid sym_fourier(const SymbolGrid& b);
SymbolGrid inv_sym_fourier(const SymbolGrid& a);
SymbolGrid sym_fourier_direct(const SymbolGrid& b);
SymbolGrid inv_sym_fourier_direct(const SymbolGrid& a);

// exp(2 pi i k / N) with k reduced mod N.
cd unit_phase(int modulus, long k);

}  // namespace weylkit
