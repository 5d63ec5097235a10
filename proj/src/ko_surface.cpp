#include "chvar/ko_surface.hpp"

#include <string>

#include "chvar/errors.hpp"

namespace chvar::ko {

SurfaceH1::SurfaceH1(int genus) : genus_(genus) {
    if (genus < 2) {
        throw ParameterOutOfRange("surface genus must be at least 2, got " + std::to_string(genus));
    }
    intersection_ = f2::F2BilinearForm::standard_symplectic(static_cast<std::size_t>(genus));
}

ThetaModel::ThetaModel(const SurfaceH1 &surface)
    : q_(f2::F2Vector(surface.dim()), surface.intersection()), phi_of_1_(0) {}

ThetaModel::ThetaModel(const SurfaceH1 &surface, f2::F2QuadraticForm q, int phi_of_1)
    : q_(std::move(q)), phi_of_1_(phi_of_1 & 1) {
    if (q_.dim() != surface.dim() || f2::polarize(q_) != surface.intersection()) {
        throw InvalidForm("theta model form is not a quadratic refinement of the intersection form");
    }
}

ThetaModel ThetaModel::odd(const SurfaceH1 &surface) {
    f2::F2Vector values(surface.dim());
    values.set(0, true);
    values.set(1, true);
    return {surface, f2::F2QuadraticForm(std::move(values), surface.intersection()), 0};
}

ThetaModel ThetaModel::unchecked(f2::F2QuadraticForm q, int phi_of_1) { return {std::move(q), phi_of_1 & 1}; }

void KOSurface::check(const KOClass &c) const {
    if (c.w1.dim() != surface_.dim()) {
        throw DimensionMismatch("KO class w1 has dimension " + std::to_string(c.w1.dim()) + ", surface needs " +
                                std::to_string(surface_.dim()));
    }
}

KOClass KOSurface::add(const KOClass &lhs, const KOClass &rhs) const {
    check(lhs);
    check(rhs);
    const int twist = surface_.intersection()(lhs.w1, rhs.w1) ? 1 : 0;
    return {lhs.rank + rhs.rank, lhs.w1 + rhs.w1, (lhs.w2 + rhs.w2 + twist) & 1};
}

KOClass KOSurface::negate(const KOClass &c) const {
    check(c);
    // <w1, w1> = 0, so (-r, w1, w2) + (r, w1, w2) = (0, 0, 0)
    return {-c.rank, c.w1, c.w2};
}

KOClass KOSurface::zero() const { return {0, f2::F2Vector(surface_.dim()), 0}; }

KOClass KOSurface::unit() const { return {1, f2::F2Vector(surface_.dim()), 0}; }

KOClass KOSurface::alpha(const f2::F2Vector &x) const {
    if (x.dim() != surface_.dim()) {
        throw DimensionMismatch("alpha: expected a class of dimension " + std::to_string(surface_.dim()));
    }
    return {1, x, 0};
}

KOClass KOSurface::omega() const { return {0, f2::F2Vector(surface_.dim()), 1}; }

KOClass KOSurface::class_of_bundle(std::int64_t n, const f2::F2Vector &w1, int w2) const {
    if (n < 1) {
        throw ParameterOutOfRange("bundle rank must be positive, got " + std::to_string(n));
    }
    KOClass c = alpha(w1);
    c.rank = n;
    c.w2 = w2 & 1;
    return c;
}

int phi(const KOClass &c, const ThetaModel &theta) {
    const int rank_parity = static_cast<int>(((c.rank % 2) + 2) % 2);
    return (rank_parity * theta.phi_of_1() + static_cast<int>(f2::evaluate(theta.q(), c.w1)) + c.w2) & 1;
}

int theorem_w2(int phi_S_1, const f2::F2Vector &w1, const ThetaModel &theta) {
    return (phi_S_1 + static_cast<int>(f2::evaluate(theta.q(), w1))) & 1;
}

} // namespace chvar::ko
