#pragma once

namespace qcso {

inline constexpr const char* kToolName = "qcso";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qcso
