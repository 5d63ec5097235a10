#pragma once

// Reduced real K-theory of a closed orientable surface, modeled through the
// invariants (virtual rank, w1, w2) with the twisted addition law.

#include <cstdint>

#include "chvar/f2_forms.hpp"

namespace chvar::ko {

/// H^1(Sigma, Z2) of a genus-g surface with its cup-product pairing.
class SurfaceH1 {
  public:
    /// Throws ParameterOutOfRange for genus < 2.
    explicit SurfaceH1(int genus);

    int genus() const noexcept { return genus_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * genus_); }
    const f2::F2BilinearForm &intersection() const noexcept { return intersection_; }

  private:
    int genus_;
    f2::F2BilinearForm intersection_;
};

struct KOClass {
    std::int64_t rank = 0;
    f2::F2Vector w1;
    int w2 = 0;

    friend bool operator==(const KOClass &, const KOClass &) = default;
};

/// A quadratic refinement of the intersection form together with phi(1).
class ThetaModel {
  public:
    /// Even model: q = sum a_i b_i (Arf 0) and phi(1) = 0.
    explicit ThetaModel(const SurfaceH1 &surface);
    /// Throws InvalidForm unless q polarizes to the intersection form.
    ThetaModel(const SurfaceH1 &surface, f2::F2QuadraticForm q, int phi_of_1);

    /// Odd model: one anisotropic block, Arf 1.
    static ThetaModel odd(const SurfaceH1 &surface);
    /// Skips the refinement check; only meant for exercising failure modes.
    static ThetaModel unchecked(f2::F2QuadraticForm q, int phi_of_1);

    const f2::F2QuadraticForm &q() const noexcept { return q_; }
    int phi_of_1() const noexcept { return phi_of_1_; }

  private:
    ThetaModel(f2::F2QuadraticForm q, int phi_of_1) : q_(std::move(q)), phi_of_1_(phi_of_1) {}

    f2::F2QuadraticForm q_;
    int phi_of_1_ = 0;
};

/// Group operations on KO classes of one surface.
class KOSurface {
  public:
    explicit KOSurface(SurfaceH1 surface) : surface_(std::move(surface)) {}

    const SurfaceH1 &surface() const noexcept { return surface_; }

    /// Whitney sum: w2 picks up the cup product of the two w1 classes.
    KOClass add(const KOClass &lhs, const KOClass &rhs) const;
    KOClass negate(const KOClass &c) const;

    KOClass zero() const;
    /// Trivial line bundle, alpha(0).
    KOClass unit() const;
    /// The line bundle with w1 = x.
    KOClass alpha(const f2::F2Vector &x) const;
    KOClass omega() const;

    /// Class of a rank-n bundle: (n-1)*1 + alpha(w1) + w2*Omega.
    KOClass class_of_bundle(std::int64_t n, const f2::F2Vector &w1, int w2) const;

  private:
    void check(const KOClass &c) const;

    SurfaceH1 surface_;
};

/// Mod-2 index homomorphism KO(Sigma) -> Z2 attached to a theta model.
int phi(const KOClass &c, const ThetaModel &theta);

/// w2(V) = phi_S(1) + phi_Sigma(alpha(w1(V))).
int theorem_w2(int phi_S_1, const f2::F2Vector &w1, const ThetaModel &theta);

} // namespace chvar::ko
