#pragma once

#include <stdexcept>
#include <string>

namespace origami {

// Domain error with a stable machine-readable code. The CLI prints the code
// and exits 1; library callers can switch on it.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* invalid_permutation = "InvalidPermutation";
inline constexpr const char* not_transitive = "NotTransitive";
inline constexpr const char* invalid_genus = "InvalidGenus";
inline constexpr const char* k_not_admissible = "KNotAdmissible";
inline constexpr const char* vertex_not_found = "VertexNotFound";
inline constexpr const char* not_a_matching = "NotAMatching";
inline constexpr const char* gap_not_diverging = "GapNotDiverging";
inline constexpr const char* fibre_mismatch = "FibreMismatch";
inline constexpr const char* too_large = "TooLarge";
inline constexpr const char* disconnected = "Disconnected";
inline constexpr const char* zero_function = "ZeroFunction";
inline constexpr const char* no_convergence = "NoConvergence";
inline constexpr const char* contains_origin = "ContainsOrigin";
inline constexpr const char* not_an_r_loop = "NotAnRLoop";
inline constexpr const char* overflow_guard = "OverflowGuard";
}  // namespace errc

}  // namespace origami
