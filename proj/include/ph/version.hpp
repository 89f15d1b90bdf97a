#ifndef PH_VERSION_HPP
#define PH_VERSION_HPP

namespace ph {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;

}  // namespace ph

#endif  // PH_VERSION_HPP
