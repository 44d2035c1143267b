#pragma once

#include <map>
#include <string>
#include <vector>

#include "dop/diffop.hpp"

namespace dop {

struct CatalogParam {
  std::string name;
  BigQ def;
};

struct CatalogInfo {
  std::string name;
  std::string description;
  std::vector<CatalogParam> params;
};

// Entries in presentation order.
std::vector<CatalogInfo> catalog_list();

// Build a catalog operator. Unspecified parameters take their defaults;
// unknown names or parameter keys raise std::invalid_argument.
DiffOp catalog_get(const std::string& name,
                   const std::map<std::string, BigQ>& params = {});

// Run the entry's stored consistency checks (golden series prefixes,
// adjoint/conjugation identities, power identities) at default parameters.
// On failure *detail names the first failing check.
bool catalog_check(const std::string& name, std::string* detail = nullptr);

}  // namespace dop
