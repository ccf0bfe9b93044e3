#pragma once

#include <string>
#include <vector>

namespace cycpath::cli {

struct VerifyRow {
  std::size_t n;
  std::string value;
  std::string expected;
  bool pass;
};

const std::vector<std::string>& identity_names();

/// Rows for n = 1..nmax. Throws InvalidArgument on an unknown name.
std::vector<VerifyRow> run_identity(const std::string& name, std::size_t nmax);

}  // namespace cycpath::cli
