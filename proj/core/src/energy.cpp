#include "krylov2d/energy.hpp"

#include <stdexcept>
#include <string>

namespace krylov2d {

ShellProfile energy_profile(const PotentialField& field, int k, OrthMode mode,
                            const KrylovOptions& options) {
    if (k < 0) throw std::invalid_argument("energy_profile: k must be >= 0");
    KrylovProcess process(field, k, mode, options);
    while (process.k() < k) {
        if (!process.step()) throw breakdown_error(process.k() + 1);
    }

    const DiamondVector& mk = process.current();
    ShellProfile profile;
    profile.c = field.half_width();
    profile.k = k;
    profile.shells.resize(static_cast<std::size_t>(k) + 1);
    for (int s = 0; s <= k; ++s) profile.shells[static_cast<std::size_t>(s)] = mk.shell_energy(s);
    profile.total = mk.squared_norm();
    profile.scale_log2 = process.scale_log2();
    profile.drift = process.drift();
    return profile;
}

double near_origin_fraction(const ShellProfile& profile, int s_cut) {
    if (s_cut < 0 || s_cut > profile.k)
        throw std::out_of_range("near_origin_fraction: s_cut " + std::to_string(s_cut) +
                                " outside [0, " + std::to_string(profile.k) + "]");
    if (profile.total == 0.0)
        throw std::invalid_argument("near_origin_fraction: profile has zero total energy");
    double sum = 0.0;
    for (int s = 0; s <= s_cut; ++s) sum += profile.shells[static_cast<std::size_t>(s)];
    return sum / profile.total;
}

}  // namespace krylov2d
