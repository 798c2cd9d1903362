#ifndef WULFF_VERSION_HPP
#define WULFF_VERSION_HPP

namespace wulff {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wulff

#endif
