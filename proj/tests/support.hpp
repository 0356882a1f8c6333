// Shared helpers for the unit suites: seeded random instances, mask
// conversions, and a tiny subprocess harness for the CLI tests.
#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/family.hpp"
#include "sperner/restrictions.hpp"
#include "sperner/rng.hpp"
#include "sperner/subset.hpp"

namespace testsupport {

inline sperner::SubsetWord mask_set(int n, std::uint64_t mask) {
  return sperner::SubsetWord::from_mask(n, mask);
}

// Random family over [n] (n <= 20): each subset kept with probability
// density; at least one member is forced so verifier scans are nontrivial.
inline sperner::SetFamily random_family(sperner::Rng& rng, int n, double density) {
  std::vector<sperner::SubsetWord> members;
  const std::uint64_t space = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < space; ++mask)
    if (rng.bernoulli(density)) members.push_back(mask_set(n, mask));
  if (members.empty()) members.push_back(mask_set(n, rng.bounded(space)));
  return sperner::SetFamily::from_members(n, std::move(members));
}

// Random valid restriction system: every layer pair i < j gets an edge with
// probability density and a uniform admissible x.
inline sperner::RestrictionSystem random_system(sperner::Rng& rng, int n, double density) {
  sperner::RestrictionSystem sys;
  sys.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!rng.bernoulli(density)) continue;
      const int cap = std::min(i, n - j);
      if (cap < 0) continue;  // unreachable: min(i, n-j) >= 0 for 0 <= i < j <= n
      const int x = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(cap) + 1));
      sys.edges.push_back({i, j, x});
    }
  return sys;
}

struct RunOut {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, captures stdout, returns the exit status.
inline RunOut run_cmd(const std::string& cmd) {
  RunOut result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Fresh scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    char tmpl[] = "/tmp/sperner-test-XXXXXX";
    if (!::mkdtemp(tmpl)) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    const int rc = std::system(("rm -rf " + path_).c_str());
    (void)rc;
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::string& path() const { return path_; }
  std::string file(const std::string& name, const std::string& content) const {
    const std::string full = path_ + "/" + name;
    std::ofstream out(full, std::ios::binary);
    out << content;
    return full;
  }

 private:
  std::string path_;
};

}  // namespace testsupport
