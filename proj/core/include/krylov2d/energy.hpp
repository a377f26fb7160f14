#ifndef KRYLOV2D_ENERGY_HPP
#define KRYLOV2D_ENERGY_HPP

#include <vector>

#include "krylov2d/krylov.hpp"

namespace krylov2d {

/// Energy of the orthogonalized vector m_k per l1 shell around the origin.
struct ShellProfile {
    double c = 0.0;
    int k = 0;
    std::vector<double> shells;  // s = 0 .. k
    double total = 0.0;          // |m_k|^2; equals the shell sum
    int scale_log2 = 0;          // power-of-two rescale carried by m_k, if any
    double drift = 0.0;
};

/// Runs the Krylov process to step k and bins |m_k|^2 into diamond shells.
/// Propagates breakdown_error if the subspace became invariant before k.
ShellProfile energy_profile(const PotentialField& field, int k, OrthMode mode,
                            const KrylovOptions& options = {});

/// Fraction of the profile's energy within shells s <= s_cut.
double near_origin_fraction(const ShellProfile& profile, int s_cut);

}  // namespace krylov2d

#endif
