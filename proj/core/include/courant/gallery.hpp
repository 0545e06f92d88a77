#pragma once

#include <optional>
#include <string>
#include <vector>

namespace courant {

/// A built-in spec text with a one-line description and where the example
/// comes from.
struct GalleryEntry {
  std::string name;
  std::string description;
  std::string origin;
  std::string text;
};

/// Fixed entries in listing order; `standard-rN` is generated on demand and
/// listed as `standard-r3`.
const std::vector<GalleryEntry>& gallery_entries();

/// Looks up a fixed entry or `standard-rN` for N >= 0.
std::optional<GalleryEntry> find_gallery(const std::string& name);

}  // namespace courant
