#include "motifclose/motif.hpp"

#include <fmt/format.h>

namespace motifclose {

namespace {

struct Names {
  std::string_view key;
  std::string_view flag;
};

constexpr std::array<Names, kNumMotifKinds> kNames = {{
    {"TRIANGLE", "triangle"},
    {"PATH4", "4-path"},
    {"STAR4", "4-star"},
    {"CYCLE4", "4-cycle"},
    {"TAILED_TRIANGLE4", "4-tailed-triangle"},
    {"CHORDAL_CYCLE4", "4-chordal-cycle"},
    {"CLIQUE4", "4-clique"},
}};

}  // namespace

std::string_view motif_key(MotifKind kind) { return kNames[static_cast<std::size_t>(kind)].key; }

std::string_view motif_flag_name(MotifKind kind) {
  return kNames[static_cast<std::size_t>(kind)].flag;
}

std::optional<MotifKind> parse_motif_kind(std::string_view name) {
  for (MotifKind kind : kAllMotifKinds) {
    if (name == motif_key(kind) || name == motif_flag_name(kind)) return kind;
  }
  return std::nullopt;
}

std::string to_string(const ClosureVector& v) {
  std::string out;
  for (MotifKind kind : kAllMotifKinds) {
    if (!out.empty()) out += ' ';
    out += fmt::format("{}={}", motif_key(kind), v[kind]);
  }
  return out;
}

}  // namespace motifclose
