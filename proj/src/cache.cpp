#include "springer/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "springer/action.hpp"
#include "springer/error.hpp"

namespace springer {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path cache_dir() {
  if (const char* env = std::getenv("SPRINGER_CACHE_DIR"); env && *env) return env;
  return "cache";
}

fs::path cache_path(const fs::path& dir, const Permutation& sigma, int k, int m) {
  const int n = sigma.size();
  return dir / ("rep_" + std::to_string(n) + "_" + std::to_string(k) + "_" + std::to_string(m)) / (sigma.key() + ".json");
}

namespace {

json basis_json(int n, int k, int m) {
  json b = json::array();
  for (const auto& d : standard_basis(n, k, m)) b.push_back(format(d));
  return b;
}

}  // namespace

std::optional<linalg::Matrix> load_rep(const fs::path& dir, const Permutation& sigma, int k, int m) {
  const int n = sigma.size();
  std::ifstream in(cache_path(dir, sigma, k, m));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("generator", "") != "zeta-oracle" || j.value("version", "") != kCacheVersion) return std::nullopt;
  if (j.value("n", "") != std::to_string(n) || j.value("k", "") != std::to_string(k) || j.value("m", "") != std::to_string(m))
    return std::nullopt;
  if (j.value("permutation", "") != sigma.key() || j["basis"] != basis_json(n, k, m)) return std::nullopt;
  const auto& rows = j["matrix"];
  const std::size_t size = j["basis"].size();
  if (!rows.is_array() || rows.size() != size) return std::nullopt;
  linalg::Matrix out(size, size);
  try {
    for (std::size_t r = 0; r < size; ++r) {
      if (!rows[r].is_array() || rows[r].size() != size) return std::nullopt;
      for (std::size_t c = 0; c < size; ++c) out(r, c) = Rational(rows[r][c].get<std::string>());
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return out;
}

void store_rep(const fs::path& dir, const Permutation& sigma, int k, int m, const linalg::Matrix& matrix) {
  const int n = sigma.size();
  json j;
  j["n"] = std::to_string(n);
  j["k"] = std::to_string(k);
  j["m"] = std::to_string(m);
  j["permutation"] = sigma.key();
  j["generator"] = "zeta-oracle";
  j["version"] = kCacheVersion;
  j["basis"] = basis_json(n, k, m);
  json rows = json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c).get_str());
    rows.push_back(row);
  }
  j["matrix"] = rows;

  auto target = cache_path(dir, sigma, k, m);
  fs::create_directories(target.parent_path());
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::DomainError, "cannot write " + tmp.string());
    out << j.dump(1) << "\n";
  }
  fs::rename(tmp, target);
}

linalg::Matrix cached_rep_matrix(const fs::path& dir, const Permutation& sigma, int k, int m) {
  if (auto hit = load_rep(dir, sigma, k, m)) return *hit;
  auto mat = rep_matrix(sigma, sigma.size(), k, m);
  store_rep(dir, sigma, k, m, mat);
  return mat;
}

}  // namespace springer
