#ifndef KRYLOV2D_VERSION_HPP
#define KRYLOV2D_VERSION_HPP

namespace krylov2d {

inline constexpr const char* version = "0.1.0";

}

#endif
