#pragma once

// On-disk store of representation matrices:
// <dir>/rep_{n}_{k}_{m}/{perm-key}.json. Entries are used only when their
// provenance, version and basis match the running build.

#include <filesystem>
#include <optional>

#include "springer/linalg.hpp"
#include "springer/permutation.hpp"

namespace springer {

inline constexpr const char* kCacheVersion = "1";

// SPRINGER_CACHE_DIR, else ./cache.
std::filesystem::path cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir, const Permutation& sigma, int k, int m);

std::optional<linalg::Matrix> load_rep(const std::filesystem::path& dir, const Permutation& sigma, int k, int m);
// Written to a temporary file and renamed into place.
void store_rep(const std::filesystem::path& dir, const Permutation& sigma, int k, int m, const linalg::Matrix& matrix);

// Cache hit or rep_matrix plus store.
linalg::Matrix cached_rep_matrix(const std::filesystem::path& dir, const Permutation& sigma, int k, int m);

}  // namespace springer
