#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace motifclose {

// Closure targets: the triangle plus the six connected 4-node graphs.
enum class MotifKind : std::uint8_t {
  kTriangle = 0,
  kPath4,
  kStar4,
  kCycle4,
  kTailedTriangle4,
  kChordalCycle4,
  kClique4,
};

inline constexpr std::size_t kNumMotifKinds = 7;

inline constexpr std::array<MotifKind, kNumMotifKinds> kAllMotifKinds = {
    MotifKind::kTriangle,        MotifKind::kPath4,         MotifKind::kStar4,
    MotifKind::kCycle4,          MotifKind::kTailedTriangle4, MotifKind::kChordalCycle4,
    MotifKind::kClique4,
};

inline constexpr std::array<MotifKind, 6> kFourNodeMotifKinds = {
    MotifKind::kPath4,           MotifKind::kStar4,         MotifKind::kCycle4,
    MotifKind::kTailedTriangle4, MotifKind::kChordalCycle4, MotifKind::kClique4,
};

// "TRIANGLE", "PATH4", ...
std::string_view motif_key(MotifKind kind);
// "triangle", "4-path", ... as accepted by --motif.
std::string_view motif_flag_name(MotifKind kind);
// Accepts either spelling, case-sensitive.
std::optional<MotifKind> parse_motif_kind(std::string_view name);

// Per-pair closure counts, one slot per MotifKind.
class ClosureVector {
 public:
  std::uint64_t& operator[](MotifKind kind) { return counts_[static_cast<std::size_t>(kind)]; }
  std::uint64_t operator[](MotifKind kind) const {
    return counts_[static_cast<std::size_t>(kind)];
  }

  friend bool operator==(const ClosureVector&, const ClosureVector&) = default;

 private:
  std::array<std::uint64_t, kNumMotifKinds> counts_{};
};

// "TRIANGLE=2 PATH4=0 ..." in kAllMotifKinds order.
std::string to_string(const ClosureVector& v);

}  // namespace motifclose
